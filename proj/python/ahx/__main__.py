"""``python -m ahx`` — the command-line interface via the in-process core."""

import sys

from ahx import run


def main() -> int:
    stdin_text = ""
    if not sys.stdin.isatty():
        stdin_text = sys.stdin.read()
    code, out, err = run(sys.argv[1:], stdin_text)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
