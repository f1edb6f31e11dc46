//! Every worked value of the library documentation, recomputed with the
//! raw oracle and compared with the library.

use nakayama::algebra::KupischSeries;
use nakayama::charseq::{
    char_of, is_d_pile, is_plus_strictly_increasing, memory_pile, p_map, y_map, CharSeq,
};
use nakayama::classify::{
    analyze, census, check_equivalent_conditions, check_simple_criteria, check_structural_props,
    enumerate_concave, enumerate_kupisch, even_sequences, extract_descent_piles,
    extract_summit_pile, verify_theorem_1, verify_theorem_1p, verify_theorem_3, Report,
};
use nakayama::constructions::{
    ascent_algebra, cliff_extension, d_cliff_module, epsilon, h_algebra, is_d_closed,
    is_d_closed_simple, partial_d_closure,
};
use nakayama::homology::{
    dominant_dimension, global_dimension, id, is_higher_auslander, is_odd, is_pd_controlled,
    is_torsionless, pd, ExtDim,
};
use nakayama::rotations::{lambda_rot, rho, rho_inv};

use super::oracle::Raw;
use super::{ks, md};

fn raw(a: &KupischSeries) -> Raw {
    Raw::new(a.entries())
}

fn fin(k: usize) -> ExtDim {
    ExtDim::Finite(k)
}

fn pds(a: &KupischSeries) -> Vec<usize> {
    raw(a).simple_pds()
}

pub fn derived_values() -> Report {
    let mut r = Report::new("derived values");
    let h31 = ks("1,2,3,3,3,3");
    let o31 = raw(&h31);
    macro_rules! eq {
        ($lhs:expr, $rhs:expr) => {{
            let (l, rr) = ($lhs, $rhs);
            r.check(l == rr, || format!("{}: {:?} != {:?}", stringify!($lhs), l, rr));
        }};
    }

    // Series and modules.
    eq!(super::oracle::valid(&[1, 2, 3, 3, 3, 3]), true);
    eq!((h31.rank(), h31.height()), (6, 3));
    eq!(md(&h31, 6, 3).socle_index(), 4);
    eq!(md(&h31, 4, 3).radical(), Some(md(&h31, 3, 2)));
    eq!(md(&h31, 6, 3).soc_quotient(), Some(md(&h31, 6, 2)));
    eq!(h31.syzygy(&md(&h31, 6, 2)), Some(md(&h31, 4, 1)));
    eq!(o31.syzygy((6, 2)), Some((4, 1)));
    let a2222 = ks("1,2,2,2");
    eq!(a2222.syzygy(&a2222.simple(4)), Some(a2222.simple(3)));
    eq!(raw(&a2222).syzygy((4, 1)), Some((3, 1)));
    eq!(h31.injective_envelope(&h31.simple(1)), md(&h31, 3, 3));
    eq!(o31.envelope((1, 1)), (3, 3));
    eq!(h31.cosyzygy(&md(&h31, 3, 2)), Some(h31.simple(4)));
    eq!(o31.cosyzygy((3, 2)), Some((4, 1)));
    eq!(h31.tau_minus(&md(&h31, 3, 2)), Some(md(&h31, 4, 2)));
    eq!(h31.indecomposables().len(), 15);
    eq!(o31.modules().len(), 15);
    eq!(md(&h31, 6, 3).submodules(), vec![md(&h31, 6, 3), md(&h31, 5, 2), md(&h31, 4, 1)]);

    let h33 = ks("1,2,2,2,3,2,2");
    eq!((h33.is_concave(), h33.is_ascending()), (true, false));
    eq!(h33.summits(), vec![5]);
    eq!(h33.first_summit().ok(), Some(md(&h33, 5, 3)));
    eq!(h33.last_summit().ok(), Some(md(&h33, 5, 3)));
    eq!(h33.principal_cliff().ok(), Some(Some(md(&h33, 5, 2))));
    eq!((h31.is_ascending(), h31.is_concave()), (true, true));
    eq!(h31.summits(), vec![3, 4, 5, 6]);
    eq!(h31.first_summit().ok(), Some(md(&h31, 3, 3)));
    eq!(h31.last_summit().ok(), Some(md(&h31, 6, 3)));
    eq!(h31.restrict(3, 6).ok(), Some(ks("1,2,3,3")));
    eq!(h33.restrict(5, 7).ok(), Some(ks("1,2,2")));
    let a123 = ks("1,2,3");
    eq!(a123.one_point_extension(&md(&a123, 3, 2)).ok(), Some(ks("1,2,3,3")));

    // Dimensions.
    eq!(pd(&h31, &Some(md(&h31, 6, 2))), fin(3));
    eq!(o31.pd((6, 2)), 3);
    eq!(id(&h31, &Some(h31.simple(1))), fin(3));
    eq!(o31.id((1, 1)), 3);
    let a12 = ks("1,2");
    eq!(id(&a12, &Some(a12.simple(1))), fin(1));
    eq!(raw(&a12).id((1, 1)), 1);
    eq!(global_dimension(&h31), fin(3));
    eq!(o31.gldim(), 3);
    eq!(pds(&h31), vec![0, 1, 1, 2, 3, 3]);
    eq!(is_torsionless(&a123, &a123.simple(2)), false);
    eq!(raw(&a123).torsionless((2, 1)), false);
    let a1233 = ks("1,2,3,3");
    eq!(is_torsionless(&a1233, &a1233.simple(2)), true);
    eq!(raw(&a1233).torsionless((2, 1)), true);
    eq!(dominant_dimension(&a2222), fin(3));
    eq!(raw(&a2222).domdim(), Some(3));
    let a1232 = ks("1,2,3,2");
    eq!(dominant_dimension(&a1232), fin(1));
    eq!(raw(&a1232).domdim(), Some(1));
    eq!(is_higher_auslander(&h31), (true, Some(3)));
    eq!(o31.is_ha(), Some(3));
    eq!(is_higher_auslander(&a1232).0, false);
    eq!((raw(&a1232).gldim(), raw(&a1232).is_ha()), (2, None));
    eq!(is_pd_controlled(&h31, &md(&h31, 6, 3)), false);
    eq!((o31.pd((6, 3)), o31.pd((5, 1))), (0, 3));
    eq!(is_odd(&h31, &md(&h31, 6, 2)), true);
    eq!(o31.pd((6, 2)) % 2, 1);

    // Characteristic sequences.
    eq!(char_of(&h31, &Some(md(&h31, 6, 3))).0, vec![0, 3, 3]);
    eq!(o31.char_of((6, 3)), vec![0, 3, 3]);
    eq!(char_of(&h31, &Some(md(&h31, 4, 3))).0, vec![1, 1, 0]);
    eq!(o31.char_of((4, 3)), vec![1, 1, 0]);
    eq!(y_map(&[1, 0]).ok(), Some(vec![2]));
    let a122 = ks("1,2,2");
    eq!(raw(&a122).char_of((3, 2)), vec![1, 0]);
    eq!(raw(&a122).pd((3, 1)), 2);
    eq!(p_map(&[2]).ok(), Some(vec![1, 0]));

    // Memory piles: the pile (1,2,3) with radical M(2,2) has cliff M(3,2).
    let p = memory_pile(&[0, 1], 1).unwrap();
    eq!(p.cliff_char(), vec![1, 1]);
    eq!(p.mu(p.cliff().0, p.cliff().1), Some(1));
    eq!(raw(&a123).char_of((2, 2)), vec![0, 1]);
    eq!(raw(&a123).char_of((3, 2)), vec![1, 1]);
    eq!(raw(&a123).pd((3, 2)), 1);
    // The summit pile of H_3(1) has radical M(2,2) with char (0,1) and four
    // summits; a radical (0,1,1) with four summits has cliff (2,3,3).
    let sp = memory_pile(&[0, 1], 4).unwrap();
    eq!(is_d_pile(&sp, 3), true);
    eq!(sp.cliff_char(), vec![3, 3]);
    eq!(o31.char_of((2, 2)), vec![0, 1]);
    eq!(o31.char_of((6, 2)), vec![3, 3]);
    eq!(memory_pile(&[0, 1, 1], 4).map(|p| p.cliff_char()).ok(), Some(vec![2, 3, 3]));
    eq!(is_d_pile(&memory_pile(&[0, 1], 1).unwrap(), 3), false);
    eq!(is_plus_strictly_increasing(&[4, 1, 3]), true);
    eq!(rho(&[4, 1, 3]), vec![1, 3, 5]);

    // Rotations with module oracles.
    eq!(lambda_rot(&[1, 0]).ok(), Some(vec![0, 1]));
    eq!(raw(&a122).char_of((3, 2)), vec![1, 0]);
    eq!(raw(&a122).char_of((2, 2)), vec![0, 1]);
    eq!(lambda_rot(&[0, 3]).ok(), Some(vec![1, 0]));
    eq!(raw(&a2222).char_of((4, 2)), vec![0, 3]);
    eq!(raw(&a2222).char_of((3, 2)), vec![1, 0]);
    eq!(rho(&[0, 1]), vec![1, 1]);
    eq!(rho_inv(&[0, 1]), vec![-1, 0]);

    // Ascent.
    eq!(epsilon(&[0, 1, 1]).ok(), Some(2));
    eq!(epsilon(&[1, 0]).ok(), Some(2));
    for (z, s) in [(vec![0, 1, 1], "1,2,3"), (vec![1, 0, 1], "1,2,2,3"), (vec![0, 3, 1], "1,2,2,2,3")] {
        let b = ks(s);
        eq!(ascent_algebra(&z).ok(), Some(b.clone()));
        let o = raw(&b);
        eq!(o.char_of((b.rank(), b.height())), z);
    }

    // Closure.
    eq!(is_d_closed_simple(&a123, 2, 3), false);
    eq!((raw(&a123).torsionless((2, 1)), raw(&a123).pd((2, 1)), raw(&a123).pd((3, 2))), (false, 1, 1));
    eq!((1..=6).all(|s| is_d_closed_simple(&h31, s, 3)), true);
    eq!(d_cliff_module(&a123, 3), Some(md(&a123, 3, 2)));
    eq!(d_cliff_module(&a2222, 3), None);
    let a22223 = ks("1,2,2,2,3");
    eq!(d_cliff_module(&a22223, 3), Some(a22223.simple(5)));
    eq!(cliff_extension(&a123, 3), ks("1,2,3,3"));
    eq!(cliff_extension(&a2222, 3), a2222.clone());
    eq!(cliff_extension(&ks("1,2,2,3"), 4), ks("1,2,2,3,3"));
    let c = partial_d_closure(&a123, 3).unwrap();
    eq!((c.series.clone(), c.iterations()), (h31.clone(), 3));
    eq!(is_d_closed(&c.series, 3), true);
    let c = partial_d_closure(&a2222, 3).unwrap();
    eq!((c.series.clone(), c.iterations()), (a2222.clone(), 0));
    let h41 = ks("1,2,2,3,3,3,3,2");
    let c = partial_d_closure(&ks("1,2,2,3"), 4).unwrap();
    eq!((c.series.clone(), c.iterations()), (h41.clone(), 4));
    eq!(h_algebra(4, &[1]).ok(), Some(h41.clone()));
    eq!(pds(&h41), vec![0, 1, 2, 1, 3, 4, 3, 4]);
    eq!(h_algebra(3, &[3]).ok(), Some(h33.clone()));
    eq!(pds(&h33), vec![0, 1, 2, 3, 1, 2, 3]);
    eq!(raw(&h41).pd((6, 1)), 4);

    // Enumeration and census.
    let all3: Vec<String> = enumerate_kupisch(3).map(|a| a.to_string()).collect();
    eq!(all3, vec!["1,2,2".to_string(), "1,2,3".to_string()]);
    eq!(enumerate_concave(3).count(), 2);
    let rec = analyze(&h31);
    eq!((rec.is_ha, rec.d, rec.summit_count), (true, Some(3), Some(4)));
    eq!(rec.first_summit_char, Some(CharSeq(o31.char_of((3, 3)))));
    eq!(rec.last_summit_char, Some(CharSeq(o31.char_of((6, 3)))));
    eq!(rec.z_char, Some(CharSeq(o31.char_of((2, 1)))));
    eq!(o31.char_of((3, 3)), vec![0, 1, 1]);
    eq!(o31.char_of((6, 3)), vec![0, 3, 3]);
    eq!(o31.char_of((2, 1)), vec![1]);
    let o41 = raw(&h41);
    let rec = analyze(&h41);
    eq!((rec.is_ha, rec.d, rec.summit_count), (true, Some(4), Some(4)));
    eq!(o41.is_ha(), Some(4));
    eq!(rec.first_summit_char.map(|c| c.0), Some(o41.char_of((4, 3))));
    eq!(o41.char_of((4, 3)), vec![1, 0, 1]);
    eq!(rec.last_summit_char.map(|c| c.0), Some(o41.char_of((7, 3))));
    eq!(o41.char_of((7, 3)), vec![3, 0, 3]);
    eq!(rec.z_char.map(|c| c.0), Some(o41.char_of((4, 1))));
    eq!(o41.char_of((4, 1)), vec![1]);
    eq!(analyze(&a1232).is_ha, false);
    let small: Vec<(String, Option<usize>)> =
        census(2).iter().map(|r| (r.kupisch.to_string(), r.d)).collect();
    eq!(small, vec![("1,2".to_string(), Some(1))]);
    eq!(raw(&a12).is_ha(), Some(1));
    let c4: Vec<(String, Option<usize>)> =
        census(4).iter().map(|r| (r.kupisch.to_string(), r.d)).collect();
    eq!(c4.contains(&("1,2,2,2".to_string(), Some(3))), true);
    eq!(c4.contains(&("1,2,3".to_string(), Some(1))), true);
    eq!((raw(&a2222).is_ha(), raw(&a123).is_ha()), (Some(3), Some(1)));

    // Piles.
    let sp = extract_summit_pile(&h31).unwrap();
    eq!((sp.radical_char(), sp.summit_count(), sp.cliff_char()), (vec![0, 1], 4, vec![3, 3]));
    let sp = extract_summit_pile(&a2222).unwrap();
    eq!((sp.series(), sp.summit_count()), (a2222.clone(), 3));
    eq!(extract_summit_pile(&h33).unwrap().summit_count(), 1);
    let dp = extract_descent_piles(&h33).unwrap();
    eq!(dp.len(), 1);
    eq!(dp.iter().map(|p| p.series()).collect::<Vec<_>>(), vec![h33.restrict(5, 7).unwrap()]);

    // Classification and conditions.
    r.merge(verify_theorem_1(3, 2, 12));
    r.merge(verify_theorem_1p(4, 12));
    eq!(even_sequences(4), vec![vec![], vec![1], vec![3], vec![1, 3]]);
    r.merge(verify_theorem_1p(2, 8));
    eq!(even_sequences(2), vec![vec![], vec![1]]);
    r.merge(verify_theorem_3(3, &[1]));
    r.merge(check_equivalent_conditions(&h31, 3));
    r.merge(check_equivalent_conditions(&h41, 4));
    eq!(check_simple_criteria(&h31, 3), true);
    eq!((o31.pd((6, 1)), o31.pd((5, 1))), (3, 3));
    eq!(check_simple_criteria(&h33, 3), true);
    for a in [&h31, &h41, &a2222] {
        r.merge(check_structural_props(a));
    }
    r
}
