import pytest

from qplane.scalar import ParameterContext
from qplane.tensor import Tensor, tensor_rank
from qplane.errors import ShapeError


@pytest.fixture(scope="module")
def ctx():
    return ParameterContext(4)


def _metric(ctx):
    # antidiagonal metric with entries r^rho_a, enough for K-algebra tests
    N = ctx.N
    C = Tensor(ctx, (N, N), 0)
    Cinv = Tensor(ctx, (N, N), 2)
    for a in range(1, N + 1):
        ap = ctx.prime(a)
        C[a - 1, ap - 1] = ctx.r_half_power(ctx.rho2(a))
        Cinv[a - 1, ap - 1] = ctx.r_half_power(ctx.rho2(a))
    return C, Cinv


def _k_tensor(ctx):
    C, Cinv = _metric(ctx)
    N = ctx.N
    K = Tensor(ctx, (N, N, N, N), 2)
    for a in range(N):
        for b in range(N):
            for c in range(N):
                for d in range(N):
                    v = Cinv[a, b] * C[c, d]
                    if not v.is_zero():
                        K[a, b, c, d] = v
    return K


def test_compose_identity(ctx):
    I = Tensor.identity(ctx, (ctx.N, ctx.N))
    K = _k_tensor(ctx)
    assert I.compose(K) == K
    assert K.compose(I) == K


def test_k_squared(ctx):
    # K o K = Q_N^-1 K with Q_N^-1 = C_ab C^ab
    K = _k_tensor(ctx)
    r = ctx.r
    qinv = 2 + r ** 2 + r ** -2
    assert K.compose(K) == K.scale(qinv)


def test_flip_squared(ctx):
    f = Tensor.flip(ctx, ctx.N)
    assert f.compose(f) == Tensor.identity(ctx, (ctx.N, ctx.N))


def test_permute_group_action(ctx):
    K = _k_tensor(ctx)
    p1 = (1, 0, 2, 3)
    p2 = (0, 1, 3, 2)
    lhs = K.permute(p1).permute(p2)
    comp = tuple(p1[p2[k]] for k in range(4))
    assert lhs == K.permute(comp)


def test_rank_p0_is_one(ctx):
    K = _k_tensor(ctx)
    assert tensor_rank(K) == 1


def test_rank_flip(ctx):
    f = Tensor.flip(ctx, ctx.N)
    assert tensor_rank(f) == ctx.N ** 2


def test_shape_errors(ctx):
    K = _k_tensor(ctx)
    I3 = Tensor.identity(ctx, (3,))
    with pytest.raises(ShapeError):
        K.compose(I3)
    with pytest.raises(ShapeError):
        K.permute((0, 1, 2, 2))


def test_kron_shapes(ctx):
    I = Tensor.identity(ctx, (2,))
    K = _k_tensor(ctx)
    T = K.kron(I)
    assert T.shape == (4, 4, 2, 4, 4, 2)
    assert T.nup == 3


def test_trace_and_contract(ctx):
    K = _k_tensor(ctx)
    tr = K.trace()
    r = ctx.r
    assert tr == 2 + r ** 2 + r ** -2
    # contracting upper leg 0 with lower leg 2 reproduces a metric trace
    t = K.contract(0, 2)
    assert t.shape == (ctx.N, ctx.N)


def test_json_export_omits_zeros(ctx):
    K = _k_tensor(ctx)
    data = K.to_json()
    assert data["shape"] == [4, 4, 4, 4]
    assert all(entry["val"] != "0" for entry in data["entries"])
    assert len(data["entries"]) == 16
