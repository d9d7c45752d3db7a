import sys

from octograd.cli import main

sys.exit(main())
