# Copyright © 2024 laxcomma contributors.

import sys

from laxcomma.cli import main

sys.exit(main())
