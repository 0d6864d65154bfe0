# wedge opening to infinity
# expect unbounded
HORNLAB-CS v1 n=0 mode=custom vars=2
OBJ 0 1:-1 2:-1
GE 0 1:1 2:-1
GE 0 2:1
