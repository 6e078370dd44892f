import numpy as np
import pytest


def max_abs(a) -> float:
    return float(np.max(np.abs(np.asarray(a))))


def unitarity_error(A) -> float:
    A = np.asarray(A)
    return max_abs(A.conj().T @ A - np.eye(A.shape[0]))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def criterion(request):
    """Record an acceptance sub-check; the terminal summary prints one line per criterion."""
    lines = request.config.__dict__.setdefault("_acceptance", {})

    def record(number: int, label: str, ok: bool, detail: str = "") -> bool:
        lines.setdefault(number, []).append((label, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.__dict__.get("_acceptance")
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        checks = results[number]
        status = "PASS" if all(ok for _, ok, _ in checks) else "FAIL"
        parts = "; ".join(f"{label}: {'ok' if ok else 'FAILED'}{' (' + d + ')' if d else ''}"
                          for label, ok, d in checks)
        terminalreporter.write_line(f"[{status}] criterion {number}: {parts}")
