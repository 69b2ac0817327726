"""Generate a batch of random promise instances and audit every invariant.

Run as: python demos/lemma_audit.py [count] [seed]
"""

import sys
import time

from gapcover import audit_batch, generate_promise_batch


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 400
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0

    started = time.perf_counter()
    batch = generate_promise_batch(count, seed)
    generated = time.perf_counter() - started

    kinds = {}
    for item in batch:
        kinds[item.kind] = kinds.get(item.kind, 0) + 1
    print(f"generated {len(batch)} promise instances in {generated:.2f}s: {kinds}")

    started = time.perf_counter()
    report = audit_batch(batch)
    audited = time.perf_counter() - started

    print(f"audited in {audited:.2f}s; checks evaluated:")
    width = max(len(name) for name in report.evaluated)
    for name, times in report.evaluated.items():
        print(f"   {name:<{width}}  {times}")

    if report.ok():
        print("no violations.")
    else:
        print(f"{len(report.violations)} violations:")
        for v in report.violations:
            print(f"   {v.check}: {v.detail}")
        sys.exit(1)


if __name__ == "__main__":
    main()
