use super::*;
use crate::algebra::{MonomialOrder, PrimeField};
use crate::system::parse_polynomial;

const VARS: [&str; 4] = ["x", "y", "z", "t"];

fn ring() -> Ring {
    Ring::new(PrimeField::new(32003).unwrap(), MonomialOrder::Grevlex, 4)
}

fn poly(r: &Ring, s: &str) -> Polynomial {
    let vars: Vec<String> = VARS.iter().map(|v| v.to_string()).collect();
    parse_polynomial(s, &vars, r).unwrap()
}

fn mono(r: &Ring, s: &str) -> Monomial {
    poly(r, s).lm().unwrap().clone()
}

fn engine(certified: bool) -> Engine {
    Engine::new(
        ring(),
        EngineConfig {
            certified,
            trace: true,
            ..EngineConfig::default()
        },
    )
}

/// Engine holding f1 = xz^2 - y^2t (e1) and f2 = x^2y - z^2t (e2), ready
/// for iteration 2 of the example ideal.
fn example_iteration_two(certified: bool) -> (Engine, PrevBasis) {
    let mut e = engine(certified);
    let r = e.ring().clone();
    let one = e.push_generator(1, &poly(&r, "x*z^2 - y^2*t")).unwrap();
    e.rules.ensure_index(1);
    let prev = PrevBasis {
        indices: vec![one],
        reducers: vec![e.store().body(one).clone()],
    };
    e.push_generator(2, &poly(&r, "x^2*y - z^2*t")).unwrap();
    e.rules.ensure_index(2);
    (e, prev)
}

#[test]
fn critical_pair_of_first_generators() {
    let (e, prev) = example_iteration_two(false);
    let r = e.ring().clone();
    let cp = e.critical_pair(2, 1, 2, &prev).unwrap();
    assert_eq!(cp.lcm, mono(&r, "x^2*y*z^2"));
    assert_eq!((cp.k, cp.l), (2, 1));
    assert_eq!(cp.u, mono(&r, "z^2"));
    assert_eq!(cp.v, mono(&r, "x*y"));
    assert_eq!(cp.degree(), 5);
    // argument order does not matter
    assert_eq!(e.critical_pair(1, 2, 2, &prev), Some(cp));
}

#[test]
fn spols_and_criterion_in_iteration_two() {
    let (mut e, prev) = example_iteration_two(false);
    let r = e.ring().clone();
    let cp = e.critical_pair(2, 1, 2, &prev).unwrap();
    let new = e.compute_spols(&[cp]).unwrap();
    assert_eq!(new, vec![3]);
    assert_eq!(e.store().poly(3), &poly(&r, "x*y^3*t - z^4*t"));
    assert_eq!(e.store().sig(3), &Signature::new(mono(&r, "z^2"), 2));
    assert_eq!(e.rules().list(2).len(), 1);

    // Faugère's criterion: x * z^2 is top-reducible by xz^2 - y^2t
    assert_eq!(e.critical_pair(3, 2, 2, &prev), None);

    let cp = e.critical_pair(3, 1, 2, &prev).unwrap();
    assert_eq!(cp.lcm, mono(&r, "x*y^3*z^2*t"));
    assert_eq!((cp.k, cp.l), (3, 1));
    assert_eq!(cp.u, mono(&r, "z^2"));
    assert_eq!(cp.v, mono(&r, "y^3*t"));
    let new = e.compute_spols(&[cp]).unwrap();
    assert_eq!(new, vec![4]);
    assert_eq!(e.store().sig(4), &Signature::new(mono(&r, "z^4"), 2));
    let mut s = e.store().poly(4).clone();
    r.make_monic(&mut s);
    assert_eq!(s, poly(&r, "z^6*t - y^5*t^2"));
}

#[test]
fn spols_skip_rewritable_pairs() {
    let (mut e, prev) = example_iteration_two(false);
    let cp = e.critical_pair(2, 1, 2, &prev).unwrap();
    assert_eq!(e.compute_spols(std::slice::from_ref(&cp)).unwrap(), vec![3]);
    let before = e.store().len();
    // the rule just added for entry 3 rewrites the same pair
    assert!(e.compute_spols(&[cp]).unwrap().is_empty());
    assert_eq!(e.store().len(), before);
}

#[test]
fn reduction_keeps_irreducible_spolynomial() {
    let (mut e, prev) = example_iteration_two(false);
    let cp = e.critical_pair(2, 1, 2, &prev).unwrap();
    let todo = e.compute_spols(&[cp]).unwrap();
    let curr = vec![1, 2];
    assert_eq!(e.reduction(todo, &prev, &curr).unwrap(), vec![3]);
    assert!(e.reduction(vec![], &prev, &curr).unwrap().is_empty());
}

#[test]
fn incremental_basis_iteration_two() {
    let (mut e, prev) = example_iteration_two(true);
    let (curr, stats) = e.incremental_basis(2, &prev).unwrap();
    assert_eq!(curr.len(), 4);
    assert_eq!(stats.pairs_by_degree.keys().copied().collect::<Vec<_>>(), vec![5, 7]);
    assert_eq!(stats.zero_reductions, 0);
    assert_eq!(
        e.trace_lines(),
        ["Processing 1 critical pairs of degree 5", "Processing 1 critical pairs of degree 7"]
    );
    assert_eq!(e.audit().violations(), 0);
    assert!(e.audit().admissibility_checks > 0);
}

/// Store with two hand-made entries over x, y, z and no previous basis.
fn two_entries(sig1: Signature, p1: &str, sig2: Signature, p2: &str) -> (Engine, PrevBasis) {
    let mut e = engine(false);
    let r = e.ring().clone();
    e.rules.ensure_index(2);
    let a = e.push_entry(sig1.clone(), TrackedPoly::untracked(poly(&r, p1))).unwrap();
    e.add_rule(&sig1, a);
    let b = e.push_entry(sig2.clone(), TrackedPoly::untracked(poly(&r, p2))).unwrap();
    e.add_rule(&sig2, b);
    (e, PrevBasis::default())
}

#[test]
fn top_reduction_zero_and_irreducible() {
    let r = ring();
    let (mut e, prev) = two_entries(Signature::unit(4, 1), "2*x", Signature::new(mono(&r, "y"), 1), "0");
    assert_eq!(e.top_reduction(2, &prev, &[1], &[]).unwrap(), (vec![], vec![]));
    assert_eq!(e.zero_reductions_total(), 1);
    assert_eq!(e.trace_lines(), ["Reduction to zero!"]);

    assert_eq!(e.top_reduction(1, &prev, &[], &[]).unwrap(), (vec![1], vec![]));
    assert_eq!(e.store().poly(1), &poly(&r, "x"));
}

#[test]
fn top_reduction_safe_step() {
    let r = ring();
    let (mut e, prev) = two_entries(
        Signature::unit(4, 1),
        "x",
        Signature::new(mono(&r, "y"), 2),
        "x*y + z^2",
    );
    assert_eq!(e.find_reductor(2, &prev, &[1], &[]), Some(1));
    assert_eq!(e.top_reduction(2, &prev, &[1], &[]).unwrap(), (vec![], vec![2]));
    assert_eq!(e.store().poly(2), &poly(&r, "z^2"));
    assert_eq!(e.store().len(), 2);
}

#[test]
fn top_reduction_unsafe_step_appends() {
    let r = ring();
    let (mut e, prev) = two_entries(
        Signature::unit(4, 2),
        "x",
        Signature::new(mono(&r, "y"), 1),
        "x*y + z^2",
    );
    let rules_before = e.rules().total_len();
    assert_eq!(e.top_reduction(2, &prev, &[1], &[]).unwrap(), (vec![], vec![2, 3]));
    assert_eq!(e.store().len(), 3);
    assert_eq!(e.rules().total_len(), rules_before + 1);
    assert_eq!(e.store().sig(3), &Signature::new(mono(&r, "y"), 2));
    assert_eq!(e.store().poly(3), &poly(&r, "z^2"));
    // entry 2 is left for reprocessing
    assert_eq!(e.store().poly(2), &poly(&r, "x*y + z^2"));
}

#[test]
fn find_reductor_rejections() {
    let r = ring();
    // equal signature
    let (mut e, prev) = two_entries(
        Signature::unit(4, 1),
        "x",
        Signature::new(mono(&r, "y"), 1),
        "x*y + z^2",
    );
    assert_eq!(e.find_reductor(2, &prev, &[1], &[]), None);
    // no head divisor
    assert_eq!(e.find_reductor(1, &prev, &[2], &[]), None);

    // u * mu_j top-reducible by the previous basis
    let (mut e, _) = two_entries(
        Signature::unit(4, 2),
        "x",
        Signature::new(mono(&r, "y"), 1),
        "x*y + z^2",
    );
    let prev = PrevBasis {
        indices: vec![],
        reducers: vec![TrackedPoly::untracked(poly(&r, "y"))],
    };
    assert_eq!(e.find_reductor(2, &prev, &[1], &[]), None);

    // rewritable reductor: a newer rule of index 2 divides y * 1
    let (mut e, prev) = two_entries(
        Signature::unit(4, 2),
        "x",
        Signature::new(mono(&r, "y"), 1),
        "x*y + z^2",
    );
    e.add_rule(&Signature::new(mono(&r, "y"), 2), 0);
    assert_eq!(e.find_reductor(2, &prev, &[1], &[]), None);
}

#[test]
fn store_cap_is_enforced() {
    let mut e = Engine::new(
        ring(),
        EngineConfig {
            store_cap: 1,
            ..EngineConfig::default()
        },
    );
    let r = e.ring().clone();
    e.push_generator(1, &poly(&r, "x")).unwrap();
    assert!(matches!(e.push_generator(2, &poly(&r, "y")), Err(Error::StoreCapExceeded(1))));
}

#[test]
fn pair_queue_orders_by_degree_then_lcm() {
    let r = ring();
    let pair = |lcm: &str, k| CriticalPair {
        lcm: mono(&r, lcm),
        k,
        u: Monomial::one(4),
        l: 1,
        v: Monomial::one(4),
    };
    let mut q = PairQueue::new();
    q.push(pair("x*y*z", 5));
    q.push(pair("x^2", 4));
    q.push(pair("x^3", 3));
    q.push(pair("x^2", 2));
    assert_eq!(q.len(), 4);
    let (d, ps) = q.pop_min_degree(&r).unwrap();
    assert_eq!(d, 2);
    assert_eq!(ps.iter().map(|p| p.k).collect::<Vec<_>>(), vec![2, 4]);
    let (d, ps) = q.pop_min_degree(&r).unwrap();
    assert_eq!(d, 3);
    assert_eq!(ps.iter().map(|p| p.k).collect::<Vec<_>>(), vec![5, 3]);
    assert!(q.is_empty());
}
