import sys

# tree-walking over adversarial reduction products nests deeply
sys.setrecursionlimit(100000)
