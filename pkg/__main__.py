# __main__.py
import sys
from pathlib import Path

# top-level packages (core, data, checks, tools, utils) are imported by bare name
_ROOT = Path(__file__).resolve().parent
if str(_ROOT) not in sys.path:
    sys.path.insert(0, str(_ROOT))

from main import main as run_main  # noqa: E402


def main() -> int:
    return run_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
