import sys

from specorder.cli import main

sys.exit(main())
