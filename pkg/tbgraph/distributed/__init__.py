# Copyright 2025 The tbgraph Authors. All rights reserved.
