"""
Built-in fusion rings: Fibonacci, Ising and cyclic group fusion
"""
from fusion.ring import FusionRing, build_fusion_data, validate_fusion
from scheme.generators import GenerationError


def gen_fibonacci() -> FusionRing:
    """{1, tau} with tau (x) tau = 1 + tau"""
    one, tau = 0, 1
    entries = {
        (one, one, one): 1,
        (one, tau, tau): 1,
        (tau, one, tau): 1,
        (tau, tau, one): 1,
        (tau, tau, tau): 1,
    }
    return validate_fusion(build_fusion_data(("1", "tau"), one, (one, tau), entries))


def gen_ising() -> FusionRing:
    """{1, sigma, psi} with sigma sigma = 1 + psi, sigma psi = psi sigma = sigma, psi psi = 1"""
    one, sigma, psi = 0, 1, 2
    entries = {(one, x, x): 1 for x in range(3)}
    entries.update({(x, one, x): 1 for x in range(3)})
    entries.update({
        (sigma, sigma, one): 1,
        (sigma, sigma, psi): 1,
        (sigma, psi, sigma): 1,
        (psi, sigma, sigma): 1,
        (psi, psi, one): 1,
    })
    return validate_fusion(build_fusion_data(("1", "sigma", "psi"), one, (one, sigma, psi), entries))


def gen_group_fusion(n: int) -> FusionRing:
    """Z_n: N(x,y,z) = [x + y = z mod n], dual(x) = -x mod n"""
    if n < 1:
        raise GenerationError(f"group fusion needs n >= 1, got {n}")
    entries = {(x, y, (x + y) % n): 1 for x in range(n) for y in range(n)}
    names = tuple(str(x) for x in range(n))
    return validate_fusion(build_fusion_data(names, 0, tuple((-x) % n for x in range(n)), entries))
