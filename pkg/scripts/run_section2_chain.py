#!/usr/bin/env python3
"""Run the weight-5 congruence chain end to end and print its certificate.

The full run produces the Sturm certificate at bound 23520 from an eta
product expanded mod 7 to 164,648 terms; pass --T-final to reduce the
depth for a smoke run.  Expansions are cached under $QCONG_CACHE_DIR.
"""

import argparse
import json
import time

from qcong.diamond import verify_section_2_chain
from qcong.store import default_cache


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--T-final", type=int, default=23521, dest="t_final")
    parser.add_argument("--no-cache", action="store_true")
    args = parser.parse_args()
    cache = None if args.no_cache else default_cache()
    started = time.time()
    reports = verify_section_2_chain(args.t_final, cache=cache)
    elapsed = time.time() - started
    print(json.dumps([r.to_dict() for r in reports], indent=2))
    passed = all(r.passed for r in reports)
    print(f"{'PASS' if passed else 'FAIL'} in {elapsed:.1f}s")
    return 0 if passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
