"""Row-triple indicator tables for the two seven-row basic sequences.

Columns: number | triple | reduced form ("-" when already reduced) |
indicator (exact text, ">=" bound, or "#k" for a repeat of row k).
"""

FIRST_BASIC = """
1|[0,4,L]|-|L
2|[0,4,L+8]|-|L+8
3|[0,4,3L+4]|-|3L+4
4|[0,4,3L+12]|-|3L+12
5|[0,4,4L+8]|-|L+2
6|[0,L,L+8]|[0,8,L+8]|L+8
7|[0,L,3L+4]|-|3L+4
8|[0,L,3L+12]|-|>=L+4
9|[0,L,4L+8]|-|4L+8
10|[0,L+8,3L+4]|-|3L+4
11|[0,L+8,3L+12]|-|>=L+4
12|[0,L+8,4L+8]|-|>=(4L+8)/3
13|[0,3L+4,3L+12]|[0,8,3L+12]|3L+12
14|[0,3L+4,4L+8]|[0,L+4,4L+8]|4L+8
15|[0,3L+12,4L+8]|[0,L-4,4L+8]|>=(4L+8)/3
16|[4,L,L+8]|[0,8,L+4]|L+4
17|[4,L,3L+4]|[0,L-4,3L]|>=L
18|[4,L,3L+12]|[0,L-4,3L+8]|3L+8
19|[4,L,4L+8]|[0,L-4,4L+4]|4L+4
20|[4,L+8,3L+4]|[0,L+4,3L]|>=L
21|[4,L+8,3L+12]|[0,L+4,3L+8]|3L+8
22|[4,L+8,4L+8]|[0,L+4,4L+4]|>=(4L+4)/3
23|[4,3L+4,3L+12]|[0,8,3L+8]|3L+8
24|[4,3L+4,4L+8]|[0,L+4,4L+4]|#22
25|[4,3L+12,4L+8]|[0,L-4,4L+4]|#19
26|[L,L+8,3L+4]|[0,8,2L+4]|L+2
27|[L,L+8,3L+12]|[0,8,2L+12]|L+6
28|[L,L+8,4L+8]|[0,8,3L+8]|#23
29|[L,3L+4,3L+12]|[0,8,2L+12]|#27
30|[L,3L+4,4L+8]|[0,L+4,3L+8]|#21
31|[L,3L+12,4L+8]|[0,L-4,3L+8]|#18
32|[L+8,3L+4,3L+12]|[0,8,2L+4]|#26
33|[L+8,3L+4,4L+8]|[0,L+4,3L]|#20
34|[L+8,3L+12,4L+8]|[0,L-4,3L]|#17
35|[3L+4,3L+12,4L+8]|[0,8,L+4]|#16
"""

SECOND_BASIC = """
1|[0,8,L]|-|L
2|[0,8,L+16]|-|L+16
3|[0,8,3L+8]|-|3L+8
4|[0,8,3L+24]|-|3L+24
5|[0,8,4L+16]|-|L+4
6|[0,L,L+16]|[0,16,L+16]|L+16
7|[0,L,3L+8]|-|3L+8
8|[0,L,3L+24]|-|>=L+8
9|[0,L,4L+16]|-|4L+16
10|[0,L+16,3L+8]|-|3L+8
11|[0,L+16,3L+24]|-|>=L+8
12|[0,L+16,4L+16]|-|>=(4L+16)/3
13|[0,3L+8,3L+24]|[0,16,3L+24]|3L+24
14|[0,3L+8,4L+16]|[0,L+8,4L+16]|4L+16
15|[0,3L+24,4L+16]|[0,L-8,4L+16]|>=(4L+16)/3
16|[8,L,L+16]|[0,16,L+8]|L+8
17|[8,L,3L+8]|[0,L-8,3L]|>=L
18|[8,L,3L+24]|[0,L-8,3L+16]|3L+16
19|[8,L,4L+16]|[0,L-8,4L+8]|4L+8
20|[8,L+16,3L+8]|[0,L+8,3L]|>=L
21|[8,L+16,3L+24]|[0,L+8,3L+16]|3L+16
22|[8,L+16,4L+16]|[0,L+8,4L+8]|>=(4L+8)/3
23|[8,3L+8,3L+24]|[0,16,3L+16]|3L+16
24|[8,3L+8,4L+16]|[0,L+8,4L+8]|#22
25|[8,3L+24,4L+16]|[0,L-8,4L+8]|#19
26|[L,L+16,3L+8]|[0,16,2L+8]|L+4
27|[L,L+16,3L+24]|[0,16,2L+24]|L+12
28|[L,L+16,4L+16]|[0,16,3L+16]|#23
29|[L,3L+8,3L+24]|[0,16,2L+24]|#27
30|[L,3L+8,4L+16]|[0,L+8,3L+16]|#21
31|[L,3L+24,4L+16]|[0,L-8,3L+16]|#18
32|[L+16,3L+8,3L+24]|[0,16,2L+8]|#26
33|[L+16,3L+8,4L+16]|[0,L+8,3L]|#20
34|[L+16,3L+24,4L+16]|[0,L-8,3L]|#17
35|[3L+8,3L+24,4L+16]|[0,16,L+8]|#16
"""


def rows(table):
    out = []
    for line in table.strip().splitlines():
        num, triple, reduced, indicator = line.split("|")
        out.append((int(num), triple, None if reduced == "-" else reduced, indicator))
    return out
