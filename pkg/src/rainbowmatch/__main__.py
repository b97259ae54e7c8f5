import sys

from rainbowmatch.cli import main

sys.exit(main())
