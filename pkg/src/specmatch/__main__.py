import sys

from specmatch.cli.app import main

sys.exit(main())
