# sum >= 5 with every entry <= 1
# expect infeasible
HORNLAB-CS v1 n=0 mode=custom vars=4
OBJ 0 1:1
GE -5 1:1 2:1 3:1 4:1
GE 1 1:-1
GE 1 2:-1
GE 1 3:-1
GE 1 4:-1
