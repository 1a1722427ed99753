#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
import sys

sys.path.insert(0, "tests")
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "graphdecomp_project.settings")

if __name__ == "__main__":
    from django.core.management import execute_from_command_line

    args = sys.argv
    args.insert(1, "test")
    args.insert(2, "graphdecomp")
    if not os.environ.get("ACCEPTANCE", False):
        args.extend(["--exclude-tag", "acceptance"])
    execute_from_command_line(args)
