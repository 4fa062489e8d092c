from pytest import raises

import chain_codes.textformat as tf
from chain_codes import exceptions
from chain_codes.fixtures import fixture
from chain_codes.linalg import Mat
from chain_codes.poly import Polynomial
from chain_codes.textformat import TokenStream

Z4 = fixture('z4').top
GR = fixture('gr42').top


def tokens(src):
    ts = TokenStream(src)
    ret = [next(ts)]
    while ret[-1][0] != tf.T_EOS:
        ret.append(next(ts))
    return ret


def test_tokens():
    toks = tokens('1,-2 ;{}:x\n')
    assert [t[0] for t in toks[:-1]] == [
        tf.T_INT, tf.T_COMMA, tf.T_INT, tf.T_SPACE, tf.T_SEMICOLON, tf.T_LBRACE, tf.T_RBRACE,
        tf.T_COLON, tf.T_OTHER, tf.T_NEWLINE]
    assert toks[2][1] == '-2'
    assert toks[-1][0] == tf.T_EOS


def test_token_locations():
    ts = TokenStream('1\n 22')
    next(ts)
    next(ts)
    next(ts)
    tok, val, loc = next(ts)
    assert (tok, val) == (tf.T_INT, '22')
    assert (loc.line, loc.column) == (1, 1)


def test_peek_and_expect():
    ts = TokenStream('7:')
    assert ts.peek()[0] == tf.T_INT
    assert ts.expect(tf.T_INT) == '7'
    with raises(exceptions.PayloadSyntaxError):
        ts.expect(tf.T_INT)


def test_lonely_minus():
    with raises(exceptions.PayloadSyntaxError):
        tokens('- 1')


def test_parse_element():
    assert tf.parse_element(Z4, '5') == 1
    assert tf.parse_element(Z4, ' -1 ') == 3
    assert tf.parse_element(GR, '1,2').key == (1, 2)
    assert tf.parse_element(GR, '3') == GR.from_int(3)
    with raises(exceptions.PayloadSyntaxError):
        tf.parse_element(Z4, '1,2')
    with raises(exceptions.PayloadSyntaxError):
        tf.parse_element(Z4, '1 2')


def test_parse_matrix():
    assert tf.parse_matrix(Z4, '2 2; 1 1') == Mat.from_ints(Z4, [[2, 2], [1, 1]])
    assert tf.parse_matrix(Z4, '1 0\n0 1\n') == Mat.identity(Z4, 2)
    assert tf.parse_matrix(GR, '1,0 0,2').rows[0][1].key == (0, 2)
    with raises(exceptions.PayloadSyntaxError) as err:
        tf.parse_matrix(Z4, '1 0\n1')
    assert err.value.loc.line == 1
    with raises(exceptions.PayloadSyntaxError):
        tf.parse_matrix(Z4, ' ; ')
    with raises(exceptions.PayloadSyntaxError):
        tf.parse_matrix(Z4, '1 x')


def test_parse_set():
    assert tf.parse_set('{1,2,4}') == [1, 2, 4]
    assert tf.parse_set('4 2 1 2') == [1, 2, 4]
    assert tf.parse_set('1,2') == [1, 2]
    assert tf.parse_set('{}') == []
    assert tf.parse_set('') == []
    with raises(exceptions.PayloadSyntaxError):
        tf.parse_set('{1,2')
    with raises(exceptions.PayloadSyntaxError):
        tf.parse_set('{1} 2')


def test_parse_poly():
    assert tf.parse_poly(Z4, '3 1') == Polynomial.from_ints(Z4, [3, 1])
    assert tf.parse_poly(Z4, '1; 0; 1') == Polynomial.from_ints(Z4, [1, 0, 1])


def test_parse_multiindex():
    assert tf.parse_multiindex('0:1 1:0 3:2') == {0: 1, 1: 0, 3: 2}
    assert tf.parse_multiindex('0:1,1:2') == {0: 1, 1: 2}
    with raises(exceptions.PayloadSyntaxError):
        tf.parse_multiindex('0:1 0:2')
    with raises(exceptions.PayloadSyntaxError):
        tf.parse_multiindex('0 1')


def test_format():
    assert tf.format_matrix(Mat.from_ints(Z4, [[1, 1]])) == '1 1'
    assert tf.format_matrix(tf.parse_matrix(GR, '1,0 2')) == '1,0 2,0'
    assert tf.format_matrix(Mat(Z4, [], 2)) == ''
    assert tf.format_set([4, 1, 2]) == '{1,2,4}'
    assert tf.format_poly(Polynomial.from_ints(Z4, [3, 1])) == '3 1'
    assert tf.format_poly(Polynomial(Z4)) == '0'


def test_error_text():
    with raises(exceptions.PayloadSyntaxError) as err:
        tf.parse_set('{1;2}')
    text = str(err.value)
    assert text.startswith('PayloadSyntaxError at 0, 2 (set): ')
    assert text.split('\n')[-1] == '       ^'
