import random

import pytest

from ptmaxcut import kernels
from ptmaxcut.generators import random_graph

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE = {}


def small_random(rng: random.Random, nmin=2, nmax=10, wmax=5):
    n = rng.randint(nmin, nmax)
    m = rng.randint(n - 1, n * (n - 1) // 2)
    return random_graph(n, m, wmax, rng.randrange(2**31))


@pytest.fixture(params=["python", "cython"])
def backend(request):
    if request.param == "cython":
        if kernels.compiled_backend is None:
            pytest.skip("compiled kernels not built")
        return kernels.compiled_backend
    return kernels.python_backend


def pytest_collection_modifyitems(items):
    # acceptance runs last so the claim18 tally covers every other suite
    items.sort(key=lambda it: it.module.__name__.endswith("test_acceptance"))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {num}: {detail}")


def extension_failures(G, step):
    """Cuts C' of the reduced graph whose extension misses the matching target.

    For every C', ``k'`` is the largest excess it certifies on the reduced
    graph; the extension must then certify ``k' + k_delta`` on ``G``.
    """
    from ptmaxcut.extend import ExtensionContext, extend_cut
    from ptmaxcut.graph import Cut, cut_weight, poljak_turzik_quarters

    Gp = G.without(step.removed)
    vs = Gp.vertices
    base = poljak_turzik_quarters(Gp).quarters
    full = poljak_turzik_quarters(G).quarters
    bad = []
    for bits in range(1 << len(vs)):
        side = {vs[i] for i in range(len(vs)) if bits >> i & 1}
        cp = Cut.of(Gp, side)
        kp = 4 * cp.weight - base
        C = extend_cut(ExtensionContext(step, cp))
        if C.weight != cut_weight(G, C.side1) or C.side1 & set(vs) != side:
            bad.append(("inconsistent", sorted(side)))
        elif 4 * C.weight < full + kp + step.k_delta_quarters:
            bad.append(("short", sorted(side)))
    return bad
