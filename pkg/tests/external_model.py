"""Line-protocol classifier used by the external-process tests.

Batches arrive as a CSV header line, one comma-separated row per point, and
a terminating blank line; the reply is one 0/1 label line per row. The rule
is a fixed linear threshold: label 1 iff the feature sum exceeds 1.

Flags (for failure-mode tests):
  --garbage     reply with a non-label token
  --stall       read forever without replying
"""

import sys


def main() -> int:
    garbage = "--garbage" in sys.argv
    stall = "--stall" in sys.argv
    while True:
        header = sys.stdin.readline()
        if not header:
            return 0
        rows = []
        while True:
            line = sys.stdin.readline()
            if not line:
                return 0
            line = line.strip()
            if not line:
                break
            rows.append([float(v) for v in line.split(",")])
        if stall:
            while sys.stdin.readline():
                pass
            return 0
        for row in rows:
            if garbage:
                sys.stdout.write("maybe\n")
            else:
                sys.stdout.write("1\n" if sum(row) > 1.0 else "0\n")
        sys.stdout.flush()


if __name__ == "__main__":
    sys.exit(main())
