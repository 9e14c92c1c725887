import pytest

from src.seg_ir import parse_ir
from src.seg_graph import build_sdg


# Fibonacci / prime test method, 23 statements.
FIB_IR = """\
0. invar
1. input n
2. assign a
3. if n 2
4.   output a
5.   else 3
6.     assign b
7.     assign i
8.     loop i n 4
9.       assign t a b
10.      assign a b
11.      assign b t
12.      assign i i
13. output b
14. assign i
15. loop i b 2
16.   if b i 1
17.     break
18.   assign i i
19. if b i 2
20.   invar
21.   else 1
22.     invar
"""

FIB_SOURCE = """\
void FiboPrime() {
  int i, n, a, b, t;
  printf("Enter value of n (>0)");
  scanf("%d", &n);
  a = 0;
  if (n == 1)
    printf("Fibo Term is %d", a);
  else {
    b = 1;
    for (i = 3; i <= n; i++) {
      t = a + b;
      a = b;
      b = t;
    }
  }
  printf("Fibo Term is %d", b);
  for (i = 2; i <= b / 2; i++) {
    if (b % i == 0)
      break;
  }
  if (b <= 1 || i <= b / 2)
    printf("Not Prime");
  else
    printf("Prime");
}
"""

# Three nested blocks rooted at 1, 3 and 9.
NESTED_IR = """\
input a
loop a 3
  assign b a
  if b 10
    input k
    assign c b
    assign d c
    assign e b
    assign f e
    if k 5
      assign g d
      assign h f
      assign m g h
      assign r m
      output m
    assign s r
    output s
    assign t b
    output t
  assign a a
"""

# Three nested ifs; each parent computes only for itself.
LAYERED_IR = """\
input a
if a 3
  assign b
  output b
  if a 3
    assign c
    output c
    if a 2
      assign d
      output d
"""

# Running sum over an input loop.
SUM_IR = """\
assign sum
assign i
loop i 3
  input a
  assign sum sum a
  assign i i
output sum
"""

# Top-level definitions feeding a two-statement block.
REGION_IR = """\
assign n2
input n1
if n2 2
  input n2
  output n1 n2
"""

STRAIGHT_IR = """\
input x
assign y x
output y
"""


@pytest.fixture
def fib_program():
    return parse_ir(FIB_IR)


@pytest.fixture
def fib_sdg(fib_program):
    return build_sdg(fib_program)


@pytest.fixture
def nested_program():
    return parse_ir(NESTED_IR)


@pytest.fixture
def nested_sdg(nested_program):
    return build_sdg(nested_program)


@pytest.fixture
def sum_program():
    return parse_ir(SUM_IR)


@pytest.fixture
def region_program():
    return parse_ir(REGION_IR)


@pytest.fixture
def chain_sdg():
    """Plain top-level vertices 0..7 with data edges 0->2, 1->2, 2->3, 3->4, 1->4, 4->5, 6->7."""
    from src.seg_graph import Sdg, VertexKind

    g = Sdg()
    for v in range(8):
        g.add_vertex(v, {v}, VertexKind.PLAIN)
    for u, v in [(0, 2), (1, 2), (2, 3), (3, 4), (1, 4), (4, 5), (6, 7)]:
        g.add_data_edge(u, v, vars={f"x{u}"})
    return g


@pytest.fixture
def write_file(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write
