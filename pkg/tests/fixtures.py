"""Small .net fixture texts shared by the CLI and acceptance tests."""

LISTING = """*Vertices 4
1 "a"
2 "b"
3 "c"
4 "d"
*edgeslist
1 2
2 3 4
3 4
"""

ARC_TRIANGLE = """*Vertices 3
1 "x"
2 "y"
3 "z"
*arcslist
1 2
2 3
3 1
"""

P4 = """*Vertices 4
1 "a"
2 "b"
3 "c"
4 "d"
*edgeslist
1 2
2 3
3 4
"""

# the expected block for each acronym on LISTING, with "<ms>" for the timing line
LISTING_GOLDEN = {
    "CN": ("3", "[[a, c], [b], [d]]"),
    "MISBF": ("2", "[a, c]"),
    "MISMM": ("2", "[a, c]"),
    "MISDegMax": ("2", "[a, c]"),
    "MISFGK": ("2", "[a, c]"),
    "MVCBF": ("2", "[b, c]"),
    "MVCBG": ("2", "[b, c]"),
    "MVCDBS": ("2", "[b, d]"),
    "MVCN": ("2", "[b, d]"),
    "SEP": ("1", "[[b]]"),
}
