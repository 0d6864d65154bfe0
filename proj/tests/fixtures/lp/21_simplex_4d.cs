# standard simplex, degenerate at the origin
# expect optimal -1
HORNLAB-CS v1 n=0 mode=custom vars=4
OBJ 0 1:-1 2:-1 3:-1 4:-1
GE 0 1:1
GE 0 2:1
GE 0 3:1
GE 0 4:1
GE 1 1:-1 2:-1 3:-1 4:-1
GE 1 1:-1 2:-1 3:-1 4:-1
GE 1 1:-1
