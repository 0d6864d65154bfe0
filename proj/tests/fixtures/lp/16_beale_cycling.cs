# Beale's example that cycles under the textbook rule
# expect optimal
HORNLAB-CS v1 n=0 mode=custom vars=4
OBJ 0 1:-3/4 2:20 3:-1/2 4:6
GE 0 1:1
GE 0 2:1
GE 0 3:1
GE 0 4:1
GE 0 1:-1/4 2:8 3:1 4:-9
GE 0 1:-1/2 2:12 3:1/2 4:-3
GE 1 3:-1
