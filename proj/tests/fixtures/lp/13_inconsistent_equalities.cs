# x + y = 1 and x + y = 2
# expect infeasible
HORNLAB-CS v1 n=0 mode=custom vars=2
OBJ 0 1:1
EQ -1 1:1 2:1
EQ -2 1:1 2:1
