mod common;

use common::*;
use gmtors::ffield::FieldConfig;
use gmtors::field::{Field, PrimeField, Rationals};
use gmtors::intlat::IntegerLattice;
use gmtors::torsion::{TorsionCoset, TorsionPoint, TorusSubgroup};
use gmtors::variety::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;

fn rand_poly(r: &mut impl Rng, n: usize, terms: usize, span: i64) -> LaurentPoly<Rationals> {
    let t: Vec<(Vec<i64>, BigRational)> = (0..terms)
        .map(|_| {
            let e = (0..n).map(|_| r.gen_range(-span..=span)).collect();
            let c = BigRational::from(big(r.gen_range(-3..=3)));
            (e, c)
        })
        .collect();
    LaurentPoly::from_terms(Rationals, n, t).unwrap()
}

fn from_int_terms<F: Field>(f: F, terms: &[(Vec<i64>, i64)]) -> LaurentPoly<F> {
    let t: Vec<_> = terms.iter().map(|(e, c)| (e.clone(), f.from_i64(*c))).collect();
    LaurentPoly::from_terms(f, 2, t).unwrap()
}

#[test]
fn laurent_degree_is_additive_over_a_domain() {
    let mut r = rng(21);
    let mut checked = 0;
    while checked < 200 {
        let n = r.gen_range(1..=3);
        let (a, b) = (r.gen_range(1..=4), r.gen_range(1..=4));
        let p = rand_poly(&mut r, n, a, 3);
        let q = rand_poly(&mut r, n, b, 3);
        if p.is_zero() || q.is_zero() {
            continue;
        }
        let pq = p.mul(&q);
        assert_eq!(pq.laurent_degree().unwrap(), p.laurent_degree().unwrap() + q.laurent_degree().unwrap());
        checked += 1;
    }
}

#[test]
fn binomial_division_reconstructs() {
    let mut r = rng(22);
    for _ in 0..200 {
        let q = rand_poly(&mut r, 2, 3, 2);
        if q.is_zero() {
            continue;
        }
        let u = vec![r.gen_range(-3..=3), r.gen_range(-3..=3)];
        if u == [0, 0] {
            continue;
        }
        let c = BigRational::from(big([1, -1, 2][r.gen_range(0..3)]));
        let binom = LaurentPoly::from_terms(Rationals, 2, [(u.clone(), BigRational::from(big(1))), (vec![0, 0], -c.clone())])
            .unwrap();
        let p = binom.mul(&q);
        let quo = divide_by_binomial(&p, &u, &c).unwrap().expect("planted factor");
        assert_eq!(binom.mul(&quo), p);
        // any other successful division also reconstructs
        for v in candidate_torus_directions(&p) {
            if let Some(w) = divide_by_binomial(&p, &v, &BigRational::from(big(1))).unwrap() {
                let b = LaurentPoly::from_terms(Rationals, 2, [(v.clone(), BigRational::from(big(1))), (vec![0, 0], BigRational::from(big(-1)))])
                    .unwrap();
                assert_eq!(b.mul(&w), p);
            }
        }
    }
}

#[test]
fn non_primitive_division_factors_through_the_primitive_one() {
    // X^{ku} − c divisible ⇒ some X^u − ζ with ζ^k = c divides
    let cases = [("x1^2*x2^2 - 1", vec![2, 2]), ("x1^3 - 1", vec![3, 0]), ("x1^4*x2^-2 - 1", vec![2, -1])];
    for (text, u) in cases {
        let p = LaurentPoly::parse(text, Rationals, Some(2)).unwrap();
        let one = BigRational::from(big(1));
        assert!(divide_by_binomial(&p, &u, &one).unwrap().is_some());
        let g = u.iter().fold(0i64, |a, &b| num_integer::gcd(a, b));
        let prim: Vec<i64> = u.iter().map(|x| x / g).collect();
        assert!(divide_by_binomial(&p, &prim, &one).unwrap().is_some(), "{text}");
    }
    // x1^2 + 1 = X^{(2,0)} + 1 has no rational primitive-direction factor
    let p = LaurentPoly::parse("x1^2 + 1", Rationals, Some(2)).unwrap();
    let m1 = BigRational::from(big(-1));
    assert!(divide_by_binomial(&p, &[2, 0], &m1).unwrap().is_some());
    for c in [-1i64, 1] {
        assert!(divide_by_binomial(&p, &[1, 0], &BigRational::from(big(c))).unwrap().is_none());
    }
}

#[test]
fn substitution_respects_ldeg_bound() {
    let mut r = rng(23);
    for _ in 0..200 {
        let p = rand_poly(&mut r, 2, 3, 2);
        if p.is_zero() {
            continue;
        }
        let u: Vec<i64> = vec![r.gen_range(-3..=3), r.gen_range(-3..=3)];
        let y = vec![BigRational::from(big(r.gen_range(1..=3))), BigRational::from(big(-1))];
        let q = substitute_monomial_curve(&p, &y, &u).unwrap();
        if q.is_zero() {
            continue;
        }
        let norm = u.iter().map(|x| x.abs()).max().unwrap() as u64;
        assert!(q.laurent_degree().unwrap() <= 2 * norm * p.laurent_degree().unwrap());
    }
}

#[test]
fn admissibility_matches_oracle_char0() {
    let mut r = rng(24);
    let mut non = 0;
    for _ in 0..200 {
        let (terms, _) = random_box_poly(&mut r, 0);
        let p = from_int_terms(Rationals, &terms);
        let rep = is_admissible_hypersurface(&p).unwrap();
        assert_eq!(rep.admissible, !binomial_divisor_q(&p), "{p}");
        non += usize::from(!rep.admissible);
    }
    assert!(non > 30);
}

#[test]
fn admissibility_matches_oracle_char2() {
    let mut r = rng(25);
    let f2 = PrimeField::new(2).unwrap();
    for _ in 0..200 {
        let (terms, _) = random_box_poly(&mut r, 2);
        let p = from_int_terms(f2, &terms);
        let rep = is_admissible_hypersurface(&p).unwrap();
        assert_eq!(rep.admissible, !binomial_divisor_f2(&p, &[1, 3, 5, 7, 15]), "{p}");
    }
}

fn random_coset(r: &mut impl Rng, p: u64) -> TorsionCoset {
    let k = r.gen_range(0..=2);
    let gens: Vec<Vec<BigInt>> = (0..k).map(|_| vec![big(r.gen_range(-2..=2)), big(r.gen_range(-2..=2))]).collect();
    let lat = IntegerLattice::from_generators(2, &gens).unwrap();
    let den = loop {
        let d = r.gen_range(1..=6i64);
        if p == 0 || d % p as i64 != 0 {
            break d;
        }
    };
    let rep = TorsionPoint::from_parts(big(den), vec![big(r.gen_range(0..den)), big(r.gen_range(0..den))], p).unwrap();
    TorsionCoset::new(rep, TorusSubgroup::new(lat, p).unwrap()).unwrap()
}

fn points_of_coset(c: &TorsionCoset, p: u64) -> Vec<(Vec<i64>, u64)> {
    let mut out = Vec::new();
    for o in (1..=24u64).filter(|&o| p == 0 || o % p != 0) {
        for a in exact_order_points(2, o) {
            let x = TorsionPoint::from_parts(big(o as i64), a.iter().map(|&v| big(v)).collect(), p).unwrap();
            if c.contains(&x) {
                out.push((a, o));
            }
        }
    }
    out
}

#[test]
fn coset_membership_matches_pointwise_char0() {
    let mut r = rng(26);
    let cfg = FieldConfig::default();
    let mut hits = 0;
    for i in 0..150 {
        let c = random_coset(&mut r, 0);
        // half of the polynomials are built to vanish on the coset's points
        let p = if i % 2 == 0 {
            rand_poly(&mut r, 2, 3, 2)
        } else {
            // X^{ov} − 1 with v ∈ Λ and o the order of the representative
            let o = c.rep().order().to_i64().unwrap();
            let v = c.group().lattice().basis().first().map(|b| to_i64(b)).unwrap_or(vec![0, 0]);
            let v: Vec<i64> = v.iter().map(|x| x * o).collect();
            let one = BigRational::from(big(1));
            let mut q = LaurentPoly::from_terms(Rationals, 2, [(v, one.clone()), (vec![0, 0], -one)]).unwrap();
            if q.is_zero() {
                q = rand_poly(&mut r, 2, 2, 2);
            }
            q.mul(&rand_poly(&mut r, 2, 2, 1))
        };
        if p.is_zero() {
            continue;
        }
        let inside = coset_in_variety(&c, &p, &cfg).unwrap();
        let pts = points_of_coset(&c, 0);
        let all = pts.iter().all(|(a, o)| vanishes_q(&p, a, *o));
        if c.dim() == 0 || inside {
            assert_eq!(inside, all, "{c:?} {p}");
        } else {
            assert!(!all, "{c:?} {p}");
        }
        hits += usize::from(inside);
    }
    assert!(hits > 5);
}

#[test]
fn coset_membership_matches_pointwise_char3() {
    let mut r = rng(27);
    let cfg = FieldConfig::default();
    let f3 = PrimeField::new(3).unwrap();
    for _ in 0..100 {
        let c = random_coset(&mut r, 3);
        let terms: Vec<(Vec<i64>, i64)> =
            (0..r.gen_range(1..=3)).map(|_| (vec![r.gen_range(-2..=2), r.gen_range(-2..=2)], r.gen_range(1..=2))).collect();
        let p = from_int_terms(f3, &terms);
        if p.is_zero() {
            continue;
        }
        let inside = coset_in_variety(&c, &p, &cfg).unwrap();
        let all = points_of_coset(&c, 3).iter().all(|(a, o)| vanishes_fp(&p, a, *o));
        if c.dim() == 0 || inside {
            assert_eq!(inside, all);
        } else {
            assert!(!all);
        }
    }
}

#[test]
fn text_round_trip() {
    let mut r = rng(28);
    for _ in 0..100 {
        let p = rand_poly(&mut r, 3, 4, 3);
        assert_eq!(LaurentPoly::parse(&p.to_text(), Rationals, Some(3)).unwrap(), p);
    }
}
