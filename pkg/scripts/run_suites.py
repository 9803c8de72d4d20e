"""Run every verification suite with its defaults and print a summary table."""
import sys

from bipfree.suites import SUITES, run_suite


def main() -> int:
    bad = 0
    for name in SUITES:
        rep = run_suite(name)
        bad += not rep.ok
        print(f"{name:24} {rep.checks:7d} checks {len(rep.failures):4d} failures {rep.duration:8.2f}s",
              flush=True)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
