import sys

from gsselect.cli import main

sys.exit(main())
