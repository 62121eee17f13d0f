import pytest

from primroots.construct import (
    exceptional_t,
    from_generator,
    iter_primitive_roots,
    lift_power,
    lift_prime_to_square,
    primitive_roots,
    smallest_primitive_root,
    to_twice_prime_power,
)
from primroots.errors import DomainError, RootSetTooLargeError
from primroots.modarith import euler_phi, is_prime, pow_mod
from primroots.oracle import brute_primitive_roots
from primroots.orders import classify_modulus, is_primitive_root

PRIMES_TO_100 = [p for p in range(2, 101) if is_prime(p)]

GOLDEN = {
    9: (2, 5),
    25: (2, 3, 8, 12, 13, 17, 22, 23),
    27: (2, 5, 11, 14, 20, 23),
    81: (2, 5, 11, 14, 20, 23, 29, 32, 38, 41, 47, 50, 56, 59, 65, 68, 74, 77),
    162: (5, 11, 23, 29, 41, 47, 59, 65, 77, 83, 95, 101, 113, 119, 131, 137, 149, 155),
}


def test_exceptional_t_examples():
    assert exceptional_t(2, 3) == 2
    assert exceptional_t(2, 5) == 1
    assert exceptional_t(3, 5) == 3


def test_exceptional_t_rejects_non_roots():
    with pytest.raises(DomainError):
        exceptional_t(4, 5)  # order 2, not a generator
    with pytest.raises(DomainError):
        exceptional_t(1, 5)
    with pytest.raises(DomainError):
        exceptional_t(7, 5)  # out of [1, p)
    with pytest.raises(DomainError):
        exceptional_t(2, 9)  # 9 is not prime


def test_exceptional_shift_is_the_only_failure():
    # For every root g of every odd prime up to 100, g + t*p generates
    # mod p**2 for all t except exactly the computed one.
    for p in PRIMES_TO_100[1:]:
        for g in brute_primitive_roots(p).roots:
            skip = exceptional_t(g, p)
            for t in range(p):
                lifted = g + t * p
                assert is_primitive_root(lifted, p * p) == (t != skip)


def test_exceptional_shift_solves_the_power_congruence():
    # The excluded value x = g + t*p is precisely the one with
    # x**(p-1) = 1 mod p**2.
    for p in PRIMES_TO_100[1:8]:
        for g in brute_primitive_roots(p).roots:
            x = g + exceptional_t(g, p) * p
            assert pow_mod(x, p - 1, p * p) == 1


def test_lift_prime_to_square_examples():
    assert lift_prime_to_square(2, 3) == [2, 5]
    assert lift_prime_to_square(2, 5) == [2, 12, 17, 22]
    assert lift_prime_to_square(3, 5) == [3, 8, 13, 23]


def test_lift_prime_to_square_accepts_two():
    # 1 generates mod 2, and the lift lands on the single root 3 of 4.
    assert lift_prime_to_square(1, 2) == [3]
    assert primitive_roots(4).roots == (3,)


def test_lift_power_examples():
    assert lift_power(2, 3, 2) == [2, 11, 20]
    assert lift_power(5, 3, 2) == [5, 14, 23]
    assert lift_power(23, 3, 3) == [23, 50, 77]


def test_lift_power_rejects_bad_input():
    with pytest.raises(DomainError, match="lift_prime_to_square"):
        lift_power(2, 3, 1)
    with pytest.raises(DomainError):
        lift_power(1, 2, 2)
    with pytest.raises(DomainError):
        lift_power(4, 3, 2)  # 4 does not generate mod 9


def test_lift_power_outputs_generate():
    # Reduced sweep; the acceptance suite runs every odd prime to 50.
    for p in (3, 5, 7, 11):
        k = 2
        while p ** (k + 1) <= 10**5:
            target = p ** (k + 1)
            for g in primitive_roots(p**k).roots:
                for x in lift_power(g, p, k):
                    assert is_primitive_root(x, target)
            k += 1


def test_lifts_of_distinct_roots_are_distinct():
    for n in (27, 81, 243, 125, 343):
        roots = primitive_roots(n).roots
        assert len(set(roots)) == len(roots)


def test_counting_identity():
    # p * phi(phi(p**k)) = phi(phi(p**(k+1))) for odd p <= 100, 2 <= k <= 6
    for p in PRIMES_TO_100[1:]:
        for k in range(2, 7):
            assert p * euler_phi(euler_phi(p**k)) == euler_phi(euler_phi(p ** (k + 1)))


def test_at_least_one_of_g_and_g_plus_p_generates_mod_p_squared():
    for p in [q for q in range(2, 201) if is_prime(q)]:
        for g in brute_primitive_roots(p).roots:
            assert is_primitive_root(g, p * p) or is_primitive_root(g + p, p * p)


def test_roots_of_p_squared_generate_all_higher_powers():
    for p in [q for q in range(3, 51) if is_prime(q)]:
        for g in primitive_roots(p * p).roots:
            k = 2
            while p**k <= 10**6:
                assert is_primitive_root(g, p**k)
                k += 1


def test_to_twice_prime_power_examples():
    assert to_twice_prime_power(2, 3, 4) == 83
    assert to_twice_prime_power(5, 3, 4) == 5
    assert to_twice_prime_power(74, 3, 4) == 155


def test_to_twice_prime_power_rejects_bad_input():
    with pytest.raises(DomainError):
        to_twice_prime_power(3, 2, 4)
    with pytest.raises(DomainError):
        to_twice_prime_power(4, 3, 2)  # not a root of 9


def test_from_generator_examples():
    assert from_generator(2, 9).roots == (2, 5)
    assert from_generator(2, 25).roots == (2, 3, 8, 12, 13, 17, 22, 23)
    assert from_generator(1, 2).roots == (1,)
    with pytest.raises(DomainError):
        from_generator(8, 9)


def test_from_generator_equals_pipeline_for_every_root():
    for n in range(2, 301):
        if not classify_modulus(n).has_primitive_roots():
            continue
        expected = primitive_roots(n).roots
        for g in expected:
            assert from_generator(g, n).roots == expected


def test_smallest_primitive_root():
    assert smallest_primitive_root(2) == 1
    assert smallest_primitive_root(3) == 2
    assert smallest_primitive_root(5) == 2
    # 2 has order 3 mod 7, so the scan settles on 3
    assert smallest_primitive_root(7) == 3
    for p in PRIMES_TO_100:
        g = smallest_primitive_root(p)
        assert g == brute_primitive_roots(p).roots[0]
    with pytest.raises(DomainError):
        smallest_primitive_root(10)


def test_primitive_roots_golden_tables():
    for n, expected in GOLDEN.items():
        assert primitive_roots(n).roots == expected


def test_primitive_roots_fixed_moduli():
    assert primitive_roots(1).roots == (1,)
    assert primitive_roots(2).roots == (1,)
    assert primitive_roots(4).roots == (3,)


def test_primitive_roots_error_names_factorization():
    with pytest.raises(DomainError, match=r"2\^3"):
        primitive_roots(8)
    with pytest.raises(DomainError, match=r"3 \* 5"):
        primitive_roots(15)


def test_primitive_roots_size_guard():
    with pytest.raises(RootSetTooLargeError):
        primitive_roots(3**20)
    with pytest.raises(RootSetTooLargeError):
        primitive_roots(81, max_roots=17)
    assert len(primitive_roots(81, max_roots=18).roots) == 18
    assert len(primitive_roots(3**9, max_roots=None).roots) == euler_phi(euler_phi(3**9))


def test_roots_lie_in_reduced_residue_system():
    from primroots.modarith import gcd

    for n in (2, 4, 9, 27, 81, 162, 250, 343, 1250):
        rs = primitive_roots(n)
        assert list(rs.roots) == sorted(set(rs.roots))
        for r in rs.roots:
            assert 1 <= r <= n
            assert gcd(r, n) == 1
        assert len(rs.roots) == euler_phi(euler_phi(n))


def test_matches_oracle_up_to_400():
    # Full agreement to 3000 is the acceptance sweep; this is the quick form.
    for n in range(1, 401):
        if classify_modulus(n).has_primitive_roots():
            assert primitive_roots(n).roots == brute_primitive_roots(n).roots


def test_iter_primitive_roots_streams_the_same_set():
    for n in (1, 2, 4, 9, 25, 27, 81, 162, 243, 250, 486, 1250):
        streamed = list(iter_primitive_roots(n))
        assert len(set(streamed)) == len(streamed)
        assert tuple(sorted(streamed)) == primitive_roots(n).roots


def test_iter_primitive_roots_walks_chains_in_order():
    # per base root of the prime, ascending shift at every level
    assert list(iter_primitive_roots(27)) == [2, 11, 20, 5, 14, 23]
    assert list(iter_primitive_roots(9)) == [2, 5]


def test_iter_primitive_roots_handles_huge_exponents():
    from itertools import islice

    # far beyond any materializable set, and deep enough to break a
    # recursive chain walk
    stream = iter_primitive_roots(3**1200)
    first = list(islice(stream, 4))
    assert first[0] == 2
    assert first[1] == 2 + 3**1199
    assert first[2] == 2 + 2 * 3**1199
    assert first[3] == 2 + 3**1198


def test_primitive_root_set_json():
    doc = primitive_roots(81).to_json()
    assert doc["modulus"] == "81"
    assert doc["phi"] == "54"
    assert doc["count"] == "18"
    assert doc["roots"][:3] == ["2", "5", "11"]
    assert all(isinstance(r, str) for r in doc["roots"])
