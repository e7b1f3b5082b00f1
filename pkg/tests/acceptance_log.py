"""Per-criterion outcome registry printed at the end of the session."""
import contextlib
import time

RESULTS: dict[int, tuple[str, bool, str]] = {}


@contextlib.contextmanager
def criterion(number: int, title: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        RESULTS[number] = (title, False, f"{type(exc).__name__}: {exc}"[:200])
        raise
    RESULTS[number] = (title, True, f"{time.perf_counter() - start:.2f} s")
