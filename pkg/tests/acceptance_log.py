"""One line per acceptance criterion, printed in the pytest terminal summary."""

RESULTS: dict = {}


def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
    RESULTS[number] = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
    print(RESULTS[number])
    return ok
