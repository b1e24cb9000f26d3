use irregularity::bounds::{d_index, theorem1_bound};
use irregularity::graph::Graph;
use irregularity::lp::*;
use irregularity::profile::degree_profile;
use irregularity::rational::{int, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn r(v: u64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[test]
fn certificates_feasible_up_to_fifty() {
    for dc in 1..=50usize {
        for d in 0..dc {
            let c = certificate_thm1(dc, d).unwrap();
            assert!(check_feasible(&c).is_feasible(), "thm1 Δ={dc} d={d}");
            assert!(check_feasible_fast(&c));
        }
        for dm in 0..dc {
            let c = certificate_prop1(dc, dm).unwrap();
            assert!(check_feasible(&c).is_feasible(), "prop1 Δ={dc} δ={dm}");
            assert!(!c.x.is_negative());
        }
        for dm in 1..dc {
            let c = certificate_prop2(dc, dm).unwrap();
            assert!(check_feasible(&c).is_feasible(), "prop2 Δ={dc} δ={dm}");
            assert!(c.z(dm).is_zero());
        }
    }
}

#[test]
fn thm1_pair_residual_identity() {
    for dc in 1..=50usize {
        for d in 0..dc {
            let c = certificate_thm1(dc, d).unwrap();
            let report = check_feasible(&c);
            // z_Δ = (Δ − 1 − d)(Δ − d) / (2Δ)
            let z_top = Rational::new(BigInt::from((dc - 1 - d) * (dc - d)), BigInt::from(2 * dc));
            assert_eq!(c.z(dc), &z_top);
            for i in 1..dc {
                let (d_, i_) = (d as i64, i as i64);
                let expected =
                    Rational::new(BigInt::from((d_ + 1 - i_) * (d_ - i_)), BigInt::from(i_));
                assert_eq!(
                    report.residual(DualConstraint::Pair(i, dc)),
                    Some(&expected)
                );
            }
        }
    }
}

#[test]
fn prop2_pair_residual_identity() {
    for dc in 2..=50usize {
        for dm in 1..dc {
            let c = certificate_prop2(dc, dm).unwrap();
            let report = check_feasible(&c);
            for j in dm + 1..=dc {
                let expected = Rational::new(
                    BigInt::from(((j - dm) * (dc - j)) as i64),
                    BigInt::from(j as i64),
                );
                assert_eq!(
                    report.residual(DualConstraint::Pair(dm, j)),
                    Some(&expected)
                );
            }
        }
    }
}

#[test]
fn prop1_reduces_to_per_vertex_values() {
    for dc in 1..=50usize {
        for dm in 0..dc {
            let c = certificate_prop1(dc, dm).unwrap();
            for i in c.index_set() {
                assert!(c.x >= irregularity::bounds::prop1_profile_value(dc, i));
            }
        }
    }
}

/// Fractional mixture of `K_{Δ,d}` and `K_{Δ,d+1}` profiles with `n`
/// vertices and `m` edges, as a point of the primal program.
fn bipartite_mixture(lp: &LinearProgram, n: u64, m: u64, dc: usize, d: usize) -> Vec<Rational> {
    let (nb, mb, dcr, dr) = (r(n), r(m), r(dc as u64), r(d as u64));
    // a (Δ+d) + b (Δ+d+1) = n and a Δd + b Δ(d+1) = m.
    let (p, q) = (&dcr + &dr, &dcr + &dr + int(1));
    let (s, t) = (&dcr * &dr, &dcr * (&dr + int(1)));
    let det = &p * &t - &q * &s;
    let a = (&nb * &t - &q * &mb) / &det;
    let b = (&p * &mb - &s * &nb) / &det;
    assert!(
        !a.is_negative() && !b.is_negative(),
        "n={n} m={m} Δ={dc} d={d}"
    );

    let mut point = vec![Rational::zero(); lp.variables.len()];
    let mut add = |name: String, v: Rational| {
        let k = lp.index_of(&name).unwrap();
        point[k] += v;
    };
    // K_{Δ,k}: k vertices of degree Δ, Δ vertices of degree k, Δk edges.
    for (weight, k) in [(a, d), (b, d + 1)] {
        let kr = r(k as u64);
        if k == dc {
            add(format!("n_{dc}"), &weight * int(2) * &dcr);
            add(format!("m_{dc}_{dc}"), &weight * &dcr * &dcr);
        } else {
            add(format!("n_{dc}"), &weight * &kr);
            add(format!("n_{k}"), &weight * &dcr);
            if k > 0 {
                add(format!("m_{k}_{dc}"), &weight * &dcr * &kr);
            }
        }
    }
    point
}

#[test]
fn closed_form_is_attained_by_mixtures_and_certified() {
    for dc in 1..=8usize {
        for n in 1..=30u64 {
            for m in 0..=dc as u64 * n / 2 {
                let lp = build_primal(n, m, dc, Variant::Thm1).unwrap();
                let d = d_index(n, m, dc).unwrap();
                let bound = theorem1_bound(n, m, dc).unwrap();
                let point = bipartite_mixture(&lp, n, m, dc, d);
                assert!(lp.is_feasible_point(&point));
                assert_eq!(lp.objective_value(&point), bound);
                assert_eq!(certificate_thm1(dc, d).unwrap().value(n, m), bound);
            }
        }
    }
}

#[test]
fn simplex_optimum_equals_closed_form() {
    for dc in 1..=8usize {
        for n in 1..=30u64 {
            for m in 0..=dc as u64 * n / 2 {
                let lp = build_primal(n, m, dc, Variant::Thm1).unwrap();
                let sol = solve(&lp).unwrap();
                assert_eq!(sol.status, Status::Optimal);
                let values = sol.values();
                assert!(lp.is_feasible_point(&values));
                for c in &lp.constraints {
                    assert_eq!(c.lhs(&values), c.rhs);
                }
                assert_eq!(lp.objective_value(&values), *sol.value.as_ref().unwrap());
                assert_eq!(
                    sol.value,
                    Some(theorem1_bound(n, m, dc).unwrap()),
                    "n={n} m={m} Δ={dc}"
                );
            }
        }
    }
}

#[test]
fn prop_variants_bounded_by_their_certificates() {
    for dc in 2..=6usize {
        for n in 2..=12u64 {
            for dm in 1..dc {
                for m in (dm as u64 * n).div_ceil(2)..=dc as u64 * n / 2 {
                    let p1 =
                        solve(&build_primal(n, m, dc, Variant::Prop1 { delta_min: dm }).unwrap())
                            .unwrap();
                    let c1 = certificate_prop1(dc, dm).unwrap();
                    assert!(p1.value.unwrap() <= c1.value(n, m));
                    let p2 =
                        solve(&build_primal(n, m, dc, Variant::Prop2 { delta_min: dm }).unwrap())
                            .unwrap();
                    let c2 = certificate_prop2(dc, dm).unwrap();
                    let v2 = p2.value.clone().unwrap();
                    assert!(v2 <= c2.value(n, m));
                    if irregularity::bounds::prop2_interval_contains(n, m, dc, dm) {
                        assert_eq!(v2, c2.value(n, m), "n={n} m={m} Δ={dc} δ={dm}");
                        let report = complementary_slackness(&p2, &c2).unwrap();
                        assert!(report.is_consistent());
                    }
                }
            }
        }
    }
}

#[test]
fn dual_program_accepts_certificates() {
    for dc in 1..=10usize {
        for d in 0..dc {
            let c = certificate_thm1(dc, d).unwrap();
            let dual = build_dual(7, 3, dc.max(1), Variant::Thm1).unwrap();
            let mut point = vec![c.x.clone(), c.y.clone()];
            point.extend(c.z.values().cloned());
            assert!(dual.is_feasible_point(&point));
        }
    }
}

#[test]
fn export_format() {
    let text = build_dual(5, 6, 3, Variant::Thm1).unwrap().to_string();
    assert!(text.starts_with("minimize\n  obj: 5 x + 12 y\n"));
    assert!(text.contains("  pair_1_3: 1 z_1 + 1 z_3 >= 2\n"));
    assert!(text.contains("  vertex_2: 1 x + 2 y - 2 z_2 >= 0\n"));
    assert!(text.contains("  y free\n"));
    let primal = build_primal(5, 6, 3, Variant::Thm1).unwrap().to_string();
    assert!(primal.contains("  incidence_2: -2 n_2 + 1 m_1_2 + 2 m_2_2 + 1 m_2_3 = 0\n"));
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1usize..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(proptest::bool::weighted(0.35), len).prop_map(move |mask| {
            Graph::from_edges(
                n,
                pairs.iter().zip(mask).filter(|(_, b)| *b).map(|(e, _)| *e),
            )
            .unwrap()
        })
    })
}

proptest! {
    #[test]
    fn profiles_are_primal_feasible(g in arb_graph(12), extra in 0usize..3) {
        let dc = g.max_degree().max(1) + extra;
        let p = degree_profile(&g, dc).unwrap();
        prop_assert!(p.satisfies_identities());
        prop_assert_eq!(p.objective(), g.irregularity());
        let (n, m) = (g.order() as u64, g.size() as u64);
        let lp = build_primal(n, m, dc, Variant::Thm1).unwrap();
        let point: Vec<Rational> = lp
            .variables
            .iter()
            .map(|v| match v.name.parse::<PrimalVar>().unwrap() {
                PrimalVar::Vertices(i) => r(p.n_count(i)),
                PrimalVar::Edges(i, j) => r(p.m_count(i, j)),
            })
            .collect();
        prop_assert!(lp.is_feasible_point(&point));
        prop_assert_eq!(lp.objective_value(&point), r(g.irregularity()));

        let cert = certificate_thm1(dc, d_index(n, m, dc).unwrap()).unwrap();
        let audit = weak_duality_audit(&p, &cert, n, m).unwrap();
        prop_assert!(audit.holds());
        prop_assert!(!audit.gap().is_negative());
    }
}
