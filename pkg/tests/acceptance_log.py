"""Shared registry so the terminal summary can list acceptance verdicts."""

RESULTS: list[tuple[str, str, str]] = []  # (criterion id, verdict, description)


def record(criterion: str, verdict: str, description: str) -> None:
    RESULTS.append((criterion, verdict, description))
