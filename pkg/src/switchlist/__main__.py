import sys

from switchlist.cli import main

sys.exit(main())
