# x + y >= 3 inside the unit box
# expect infeasible
HORNLAB-CS v1 n=0 mode=custom vars=2
OBJ 0 1:1
GE -3 1:1 2:1
GE 1 1:-1
GE 1 2:-1
