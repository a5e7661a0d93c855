import os
import sys

# Make the rkhsmult package importable when tests run from a checkout
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
