import sys

from racah_natural.cli import main

if __name__ == "__main__":
    sys.exit(main())
