from chain_codes.utils import Location

src = """
0 1 2 3;
1 0 1 1
0 0 2 x
2 2 2 2
0 0 0 1
""".strip()


def test_location_context_single_line():
    loc = Location(src="1 0 1")
    assert len(loc.context(num_ctx_lines=20)) == 2


def test_location_from_pos():
    loc = Location.location_from_pos(src=src, pos=src.find("x"))
    assert loc.line == 2
    assert loc.column == 6
    assert loc.pos == src.find("x")
    assert str(loc) == '2, 6'


def test_location_context():
    loc = Location.location_from_pos(src=src, pos=src.find("x"))
    assert len(loc.context(num_ctx_lines=1)) == 4

    loc = Location.location_from_pos(src=src, pos=0)
    assert len(loc.context(num_ctx_lines=1)) == 3

    loc = Location.location_from_pos(src=src, pos=len(src) - 1)
    ctx = loc.context(num_ctx_lines=20)
    assert len(ctx) == 1 + len(src.split('\n'))
    assert ctx[-1].endswith('^')
    assert len(loc.context(num_ctx_lines=2)) == 4


def test_clone():
    loc = Location(src, name='matrix')
    copy = loc.clone()
    copy._inc_pos(3)
    assert loc.pos == 0
    assert str(copy) == '0, 3 (matrix)'
