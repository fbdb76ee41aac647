use cosetlab::lab::{GroupContext, Options};
use cosetlab::report::AnalysisReport;
use cosetlab::{catalog_sweep_list, tablefmt, Cyclotomic, GroupSpec, Permutation};
use proptest::prelude::*;

const CONDUCTORS: [u32; 8] = [1, 3, 4, 5, 8, 9, 12, 15];

fn cyclotomic_in(e: u32) -> impl Strategy<Value = Cyclotomic> {
    (prop::collection::vec((0..e, -6i64..=6), 0..6), 1i64..5)
        .prop_map(move |(terms, den)| Cyclotomic::from_terms(e, terms, den))
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    prop::sample::select(&CONDUCTORS[..]).prop_flat_map(cyclotomic_in)
}

/// Three elements of one field.
fn triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(&CONDUCTORS[..]).prop_flat_map(|e| (cyclotomic_in(e), cyclotomic_in(e), cyclotomic_in(e)))
}

fn permutation() -> impl Strategy<Value = Permutation> {
    (1usize..10).prop_flat_map(perm_of_degree)
}

fn perm_of_degree(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn group_spec() -> impl Strategy<Value = GroupSpec> {
    let leaf = prop::sample::select(catalog_sweep_list(200));
    leaf.prop_recursive(2, 4, 2, |inner| (inner.clone(), inner).prop_map(|(a, b)| GroupSpec::direct(a, b)))
}

fn small_group() -> impl Strategy<Value = GroupSpec> {
    prop::sample::select(catalog_sweep_list(120))
}

fn context(spec: &GroupSpec) -> GroupContext {
    GroupContext::from_spec(spec, Options::default()).unwrap()
}

/// A group with a permutation of its character rows.
fn group_and_row_order() -> impl Strategy<Value = (GroupSpec, Vec<usize>)> {
    small_group().prop_flat_map(|spec| {
        let r = context(&spec).table().rows().len();
        (Just(spec), Just((0..r).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn cyclotomic_ring_laws((a, b, c) in triple()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Cyclotomic::one(1), a.clone());
        prop_assert_eq!(&a + &(-&a), Cyclotomic::zero(a.conductor()));
    }

    #[test]
    fn conjugation_is_a_field_automorphism((a, b, _) in triple()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!(a.conj().conj(), a.clone());
        let n = a.abs_square();
        prop_assert_eq!(n.conj(), n.clone());
    }

    #[test]
    fn galois_action_is_a_ring_map((a, b, _) in triple(), j in 1u32..200) {
        let e = a.conductor();
        prop_assume!(num_integer::gcd(j, e) == 1);
        prop_assert_eq!((&a * &b).galois(j), &a.galois(j) * &b.galois(j));
        prop_assert_eq!((&a + &b).galois(j), &a.galois(j) + &b.galois(j));
        prop_assert_eq!(a.galois(e - 1), a.conj());
    }

    #[test]
    fn embedding_is_a_ring_map((a, b, _) in triple(), m in 1u32..4) {
        let t = a.conductor() * m;
        prop_assert_eq!((&a * &b).embed(t), &a.embed(t) * &b.embed(t));
        prop_assert_eq!(a.embed(t), a.clone());
    }

    #[test]
    fn cyclotomic_text_round_trips(a in cyclotomic()) {
        let back: Cyclotomic = a.to_string().parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(Cyclotomic::parse_sparse(a.conductor(), &a.sparse_string()).unwrap(), a);
    }

    #[test]
    fn cyclotomic_parse_never_panics(s in "E\\([0-9]{0,5}\\)\\[[0-9:/,-]{0,24}\\]") {
        let _ = s.parse::<Cyclotomic>();
    }

    #[test]
    fn permutation_group_laws(
        (p, q, r) in (1usize..10).prop_flat_map(|n| (perm_of_degree(n), perm_of_degree(n), perm_of_degree(n)))
    ) {
        let pq = p.compose(&q).unwrap();
        prop_assert_eq!(pq.compose(&r).unwrap(), p.compose(&q.compose(&r).unwrap()).unwrap());
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert_eq!(pq.inverse(), q.inverse().compose(&p.inverse()).unwrap());
        for i in 0..p.degree() as u32 {
            prop_assert_eq!(pq.apply(i), p.apply(q.apply(i)));
        }
    }

    #[test]
    fn permutation_order_and_cycles(p in permutation()) {
        prop_assert!(p.pow(p.order()).is_identity());
        let cycles = p.cycles();
        let lcm = cycles.iter().fold(1u64, |l, c| num_integer::lcm(l, c.len() as u64));
        prop_assert_eq!(lcm, p.order());
        let refs: Vec<&[u32]> = cycles.iter().map(Vec::as_slice).collect();
        prop_assert_eq!(Permutation::from_cycles(p.degree(), &refs).unwrap(), p);
    }

    #[test]
    fn group_spec_text_round_trips(spec in group_spec()) {
        let back: GroupSpec = spec.to_string().parse().unwrap();
        prop_assert_eq!(back, spec);
    }

    #[test]
    fn report_json_round_trips(
        messages in prop::collection::vec(any::<String>(), 0..4),
        seed in any::<u64>(),
        parallel in any::<bool>(),
        timing in prop::option::of(any::<u64>()),
    ) {
        let options = Options { seed, parallel, ..Options::default() };
        let mut r = AnalysisReport::new("search", options);
        r.messages = messages;
        r.timing_ms = timing;
        r.tally();
        let back = AnalysisReport::from_json(&r.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), r.to_json());
        prop_assert_eq!(back, r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn table_is_seed_independent(spec in small_group(), seed in any::<u64>()) {
        let base = context(&spec);
        let other = GroupContext::from_spec(&spec, Options { seed, ..Options::default() }).unwrap();
        prop_assert_eq!(tablefmt::export(base.table()), tablefmt::export(other.table()));
        prop_assert!(other.table().violations().is_empty());
    }

    #[test]
    fn table_text_ignores_row_order((spec, perm) in group_and_row_order()) {
        let ctx = context(&spec);
        let text = tablefmt::export(ctx.table());
        let lines: Vec<&str> = text.lines().collect();
        let first = lines.iter().position(|l| l.starts_with("chi")).unwrap();
        let rows: Vec<&str> = perm.iter().map(|&i| lines[first + i]).collect();
        let shuffled = [&lines[..first], &rows[..]].concat().join("\n");
        let back = tablefmt::ingest(&shuffled).unwrap();
        prop_assert_eq!(tablefmt::export(&back), text);
        prop_assert!(tablefmt::diff(ctx.table(), &back).is_empty());
    }
}
