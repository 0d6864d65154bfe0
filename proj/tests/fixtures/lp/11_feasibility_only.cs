# no objective row
# expect optimal 0
HORNLAB-CS v1 n=0 mode=custom vars=2
GE 0 1:1
GE 0 2:1
GE 4 1:-1 2:-1
