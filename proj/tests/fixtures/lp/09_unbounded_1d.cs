# minimize -x over x >= 0
# expect unbounded
HORNLAB-CS v1 n=0 mode=custom vars=1
OBJ 0 1:-1
GE 0 1:1
