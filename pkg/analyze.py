# Copyright 2025 The tbgraph Authors. All rights reserved.
import warnings

warnings.filterwarnings('ignore')

from tbgraph.cli import main

if __name__ == "__main__":
    main()
