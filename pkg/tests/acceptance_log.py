"""Collects one PASS/FAIL line per acceptance criterion."""

LINES = []


def record(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}"
    LINES.append(line)
    print(line)
    return ok
