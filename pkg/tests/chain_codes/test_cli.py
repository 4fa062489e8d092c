import json

from pytest import raises

from chain_codes.cli import ChainCodes, main


def run(capsys, *args):
    _, retcode = ChainCodes.run(['chain-codes'] + list(args), exit=False)
    out, err = capsys.readouterr()
    return retcode, out, err


def test_ring_show(capsys):
    retcode, out, _ = run(capsys, 'ring', 'show', '--fixture', 'z4')
    assert retcode == 0
    assert out.splitlines() == ['Z4', 'p = 2, n = 1, s = 2, q = 2', 'size = 4', 'units = 2', 'θ = 2', 'Γ = {0,1}']


def test_ring_from_parameters(capsys):
    retcode, out, _ = run(capsys, 'ring', 'show', '--family', 'unramified', '--p', '3', '--s', '2', '--json')
    assert retcode == 0
    data = json.loads(out)
    assert data['label'] == 'Z9'
    assert data['units'] == 6


def test_code_rsf(capsys):
    retcode, out, _ = run(capsys, 'code', 'rsf', '--fixture', 'z4', '--matrix', '2 2;1 1')
    assert retcode == 0
    assert out.splitlines() == ['Z4 code of length 2', '1 1', 'type (2;1,0)']
    retcode, out, _ = run(capsys, 'code', 'rsf', '--fixture', 'z4', '--matrix', '2 2;1 1', '--json')
    data = json.loads(out)
    assert data['code']['type'] == [1, 0]
    assert data['pivots'] == [[0, 0, 0]]


def test_code_dual(capsys):
    retcode, out, _ = run(capsys, 'code', 'dual', '--fixture', 'z4', '--matrix', '1 1')
    assert retcode == 0
    assert out.splitlines()[1] == '1 3'


def test_code_from_json(capsys):
    _, out, _ = run(capsys, 'code', 'rsf', '--fixture', 'gr42', '--matrix', '1,0 0,2', '--json')
    retcode, out, _ = run(capsys, 'code', 'res', '--code', out.strip())
    assert retcode == 0
    assert out.splitlines() == ['Z4 code of length 2', '2 0', 'type (2;0,1)']


def test_ext_trace(capsys):
    retcode, out, _ = run(capsys, 'ext', 'trace', '--fixture', 'gr42', '--element', '0,1')
    assert retcode == 0
    assert out.strip() == '3'


def test_cyclic_cosets(capsys):
    retcode, out, _ = run(capsys, 'cyclic', 'cosets', '--fixture', 'z4', '--ell', '7')
    assert retcode == 0
    assert out.strip() == '{0} {1,2,4} {3,5,6}'


def test_cyclic_multiindex(capsys):
    retcode, out, _ = run(capsys, 'cyclic', 'multiindex', '--fixture', 'z4', '--ell', '7',
                          '--multiindex', '0:0 1:2 3:2')
    assert retcode == 0
    assert out.splitlines() == ['Z4 code of length 7', '1 1 1 1 1 1 1', 'type (7;1,0)']
    retcode, out, _ = run(capsys, 'cyclic', 'multiindex', '--fixture', 'z4', '--ell', '7',
                          '--matrix', '1 1 1 1 1 1 1')
    assert retcode == 0
    assert out.strip() == '0:0 1:2 3:2'


def test_domain_error(capsys):
    retcode, out, err = run(capsys, 'cyclic', 'cosets', '--fixture', 'z4', '--ell', '6')
    assert retcode == 1
    assert err.startswith('NotCoprime: ')
    retcode, out, _ = run(capsys, 'cyclic', 'cosets', '--fixture', 'z4', '--ell', '6', '--json')
    assert retcode == 1
    assert json.loads(out)['error'] == 'NotCoprime'


def test_usage_errors(capsys):
    retcode, _, err = run(capsys, 'code', 'rsf', '--fixture', 'z4')
    assert retcode == 2
    assert 'MissingPayload: this command needs --matrix' in err
    retcode, _, err = run(capsys, 'verify', 'unknown')
    assert retcode == 2
    assert 'UnknownSuite' in err
    retcode, _, _ = run(capsys, 'ring', 'show', '--fixture', 'z5')
    assert retcode == 2


def test_syntax_error(capsys):
    retcode, _, err = run(capsys, 'code', 'rsf', '--fixture', 'z4', '--matrix', '1 0;1')
    assert retcode == 1
    assert err.startswith('PayloadSyntaxError at ')


def test_verify(capsys):
    retcode, out, _ = run(capsys, 'verify', 'bijection', '--fixture', 'z4', '--ell', '3')
    assert retcode == 0
    assert out.startswith('bijection: 20/20 passed')


def test_main_takes_arguments_without_program_name(capsys):
    with raises(SystemExit) as err:
        main(['ring', 'show', '--fixture', 'z4'])
    assert err.value.code == 0
    out, _ = capsys.readouterr()
    assert out.splitlines()[0] == 'Z4'
