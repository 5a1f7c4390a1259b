//! Acceptance gate. One test per headline claim of the engine; each prints
//! a `PASS` line with its runtime (visible under `--nocapture`) and enforces
//! the runtime bound the claim is specified with. Any failure prints the
//! offending counterexample through the assertion message.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use orbitcover_core::{
    affine_orbits, build_nerve, enumerate_compositions, harmonic_regions, homology,
    nerve_isomorphic, orbit_cover, realize, rotation_classes, unit_group, IntervalComposition,
    Mode, PitchClassSet, Scale, SimplicialComplex,
};

fn pass(line: &str, elapsed: Duration) {
    println!("PASS  {line}  [{elapsed:?}]");
}

fn within(elapsed: Duration, bound: Duration) {
    assert!(elapsed <= bound, "ran in {elapsed:?}, bound is {bound:?}");
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn comp(parts: &[usize]) -> IntervalComposition {
    IntervalComposition::new(parts.to_vec()).expect("valid composition")
}

fn scalar(n: usize) -> Scale {
    Scale::new(PitchClassSet::new(n, 0..n).expect("nonempty universe"))
}

fn scale_of(universe: usize, elements: &[usize]) -> Scale {
    Scale::new(PitchClassSet::new(universe, elements.iter().copied()).expect("valid set"))
}

/// Euler characteristic agrees with the alternating Betti sum on every
/// complex we build here; `homology` also cross-checks internally.
fn check_homology(complex: &SimplicialComplex) -> (Vec<usize>, Vec<Vec<u64>>, i64) {
    let profile = homology(complex);
    let alternating: i64 = profile
        .betti()
        .iter()
        .enumerate()
        .map(|(p, &b)| if p % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    assert_eq!(profile.euler(), alternating, "Euler–Poincaré mismatch");
    (
        profile.betti().to_vec(),
        profile.torsion().to_vec(),
        profile.euler(),
    )
}

#[test]
fn normal_order_and_the_first_mode_tonic() {
    let start = Instant::now();
    let set = PitchClassSet::new(12, [0, 2, 4, 5, 7, 9, 11]).unwrap();
    let order = set.normal_order();
    let tonic = Mode::new(set, 0).unwrap().tonic();
    let elapsed = start.elapsed();
    assert_eq!(order, vec![11, 0, 2, 4, 5, 7, 9]);
    assert_eq!(
        tonic, 11,
        "mode 0 of the major set is rooted on its leading tone"
    );
    within(elapsed, Duration::from_millis(1));
    pass(
        "normal order (11,0,2,4,5,7,9) with first-mode tonic 11",
        elapsed,
    );
}

#[test]
fn fifteen_compositions_of_seven_in_five_rotation_classes() {
    let start = Instant::now();
    let comps = enumerate_compositions(7, 3).unwrap();
    let classes = rotation_classes(7, 3).unwrap();
    let elapsed = start.elapsed();

    assert_eq!(comps.len(), 15);
    let expected: [(&[usize], &[&[usize]]); 5] = [
        (&[1, 1, 5], &[&[1, 1, 5], &[1, 5, 1], &[5, 1, 1]]),
        (&[1, 2, 4], &[&[1, 2, 4], &[2, 4, 1], &[4, 1, 2]]),
        (&[1, 3, 3], &[&[1, 3, 3], &[3, 1, 3], &[3, 3, 1]]),
        (&[1, 4, 2], &[&[1, 4, 2], &[2, 1, 4], &[4, 2, 1]]),
        (&[2, 2, 3], &[&[2, 2, 3], &[2, 3, 2], &[3, 2, 2]]),
    ];
    assert_eq!(classes.len(), expected.len());
    for (class, (rep, members)) in classes.iter().zip(expected) {
        assert_eq!(class.representative(), &comp(rep));
        let members: Vec<IntervalComposition> = members.iter().map(|m| comp(m)).collect();
        assert_eq!(class.members(), members);
    }
    within(elapsed, Duration::from_secs(1));
    pass(
        "|Sigma(7,3)| = 15 = C(6,2) falling into the five listed rotation classes",
        elapsed,
    );
}

#[test]
fn unit_action_splits_seven_three_into_two_orbits() {
    let start = Instant::now();
    let orbits = affine_orbits(7, 3).unwrap();
    let twisted = comp(&[2, 2, 3]).u_transform(5).unwrap();
    let elapsed = start.elapsed();

    assert_eq!(orbits.len(), 2);
    let reps: Vec<Vec<&IntervalComposition>> = orbits
        .iter()
        .map(|o| o.classes().iter().map(|c| c.representative()).collect())
        .collect();
    assert_eq!(
        reps[0],
        vec![&comp(&[1, 1, 5]), &comp(&[1, 3, 3]), &comp(&[2, 2, 3])]
    );
    assert_eq!(reps[1], vec![&comp(&[1, 2, 4]), &comp(&[1, 4, 2])]);

    // Every intra-orbit ordered pair carries a verified unit witness.
    for orbit in &orbits {
        for from in 0..orbit.classes().len() {
            for to in 0..orbit.classes().len() {
                let u = orbit
                    .witness_between(from, to)
                    .unwrap_or_else(|| panic!("no witness {from}->{to}"));
                for member in orbit.classes()[from].members() {
                    let image = member.u_transform(u).unwrap();
                    assert!(
                        orbit.classes()[to].contains(&image.canonical_rotation()),
                        "witness u={u} does not carry {member} into class {to}"
                    );
                }
            }
        }
    }
    assert_eq!(twisted, comp(&[3, 3, 1]));
    within(elapsed, Duration::from_secs(1));
    pass(
        "affine orbits {115,133,223} and {124,142}, witnessed pairwise; (2,2,3)*5 = (3,3,1)",
        elapsed,
    );
}

#[test]
fn tertian_nerves_look_like_a_moebius_band() {
    let start = Instant::now();
    let seven_note_scales = [
        scale_of(12, &[0, 2, 4, 5, 7, 9, 11]),
        scale_of(12, &[5, 7, 9, 10, 0, 2, 4]),
        scale_of(12, &[4, 6, 7, 10, 0, 1, 3]),
        scale_of(12, &[0, 2, 3, 5, 7, 8, 11]),
        scale_of(15, &[0, 2, 4, 7, 9, 11, 13]),
        scalar(7),
    ];
    let tertian = comp(&[2, 2, 3]);
    let spread = comp(&[1, 4, 2]);
    for scale in &seven_note_scales {
        for degree in [0, 3] {
            let root = scale.at_degree(degree);
            let nerve = build_nerve(&orbit_cover(scale, &tertian, root).unwrap());
            assert_eq!(nerve.f_vector(), vec![7, 14, 7]);
            let (betti, torsion, euler) = check_homology(&nerve);
            assert_eq!(betti, vec![1, 1, 0], "tertian Betti off for {scale:?}");
            assert!(torsion.iter().all(Vec::is_empty), "unexpected torsion");
            assert_eq!(euler, 0);

            let nerve = build_nerve(&orbit_cover(scale, &spread, root).unwrap());
            assert_eq!(nerve.f_vector(), vec![7, 21, 7]);
            let (betti, _, euler) = check_homology(&nerve);
            assert_eq!(betti[1], 8, "(1,4,2) cover must have eight 1-holes");
            assert_eq!(euler, -7);
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1));
    pass(
        "tertian nerve f=(7,14,7), Betti (1,1,0), no torsion; (1,4,2) nerve f=(7,21,7), b_1=8",
        elapsed,
    );
}

#[test]
fn nerve_isomorphism_is_exactly_the_affine_orbit_relation() {
    let start = Instant::now();
    let mut pairs = 0usize;
    for n in 2..=9 {
        for k in 2..=n {
            if gcd(n, k) != 1 {
                continue;
            }
            let classes = rotation_classes(n, k).unwrap();
            let orbits = affine_orbits(n, k).unwrap();
            let orbit_of: Vec<usize> = classes
                .iter()
                .map(|c| {
                    orbits
                        .iter()
                        .position(|o| o.classes().iter().any(|d| d == c))
                        .expect("orbits partition the classes")
                })
                .collect();
            let scale = scalar(n);
            let nerves: Vec<SimplicialComplex> = classes
                .iter()
                .map(|c| {
                    let nerve = build_nerve(&orbit_cover(&scale, c.representative(), 0).unwrap());
                    check_homology(&nerve);
                    nerve
                })
                .collect();
            for i in 0..classes.len() {
                for j in i..classes.len() {
                    let found = nerve_isomorphic(&nerves[i], &nerves[j]).is_some();
                    let predicted = orbit_of[i] == orbit_of[j];
                    assert_eq!(
                        found,
                        predicted,
                        "counterexample at n={n}, k={k}: {} vs {} \
                         (nerve isomorphism {found}, affine criterion {predicted})",
                        classes[i].representative(),
                        classes[j].representative()
                    );
                    pairs += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(120));
    pass(
        &format!("nerve isomorphism == same affine orbit on all {pairs} class pairs, n <= 9"),
        elapsed,
    );
}

#[test]
fn the_transport_command_reproduces_the_worked_example() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_orbitcover"))
        .env_remove("ORBITCOVER_WIDTH")
        .args([
            "transport",
            "12: 5,7,9,10,0,2,4",
            "(2,2,3)",
            "5",
            "4",
            "12: 4,6,7,10,0,1,3",
            "--root",
            "5",
        ])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();

    let map_block =
        "pointwise map:\n  5 -> 4\n  7 -> 1\n  9 -> 10\n  10 -> 6\n  0 -> 3\n  2 -> 0\n  4 -> 7\n";
    assert!(
        text.contains(map_block),
        "pointwise correspondence wrong:\n{text}"
    );
    let members_block = "image members:\n  V0 = {4,10,3}\n  V1 = {6,0,4}\n  V2 = {7,1,6}\n  V3 = {10,3,7}\n  V4 = {0,4,10}\n  V5 = {1,6,0}\n  V6 = {3,7,1}\n";
    assert!(
        text.contains(members_block),
        "image member list wrong:\n{text}"
    );
    assert!(text.contains("member map: C0->V0 C1->V5 C2->V3 C3->V1 C4->V6 C5->V4 C6->V2"));
    assert!(text.contains("morphism check: ok"));
    within(elapsed, Duration::from_secs(1));
    pass(
        "transport u=5 emits 5->4, 7->1, 9->10, 10->6, 0->3, 2->0, 4->7 member-to-member",
        elapsed,
    );
}

#[test]
fn property_suites_hold_at_their_stated_scales() {
    let start = Instant::now();

    // Group laws for every mode of every scale size up to 12, plus the
    // musical scales used elsewhere in the suite.
    let mut scales: Vec<Scale> = (1..=12).map(scalar).collect();
    scales.push(scale_of(12, &[0, 2, 4, 5, 7, 9, 11]));
    scales.push(scale_of(12, &[5, 7, 9, 10, 0, 2, 4]));
    scales.push(scale_of(12, &[4, 6, 7, 10, 0, 1, 3]));
    for scale in &scales {
        let n = scale.len();
        let elements: Vec<usize> = (0..n).map(|d| scale.at_degree(d)).collect();
        for index in 0..n {
            let mode = Mode::of_scale(scale.clone(), index).unwrap();
            let e = mode.tonic();
            for &x in &elements {
                assert_eq!(mode.add(e, x).unwrap(), x, "identity law");
                // Inverse: the element at the complementary degree.
                let inv = mode.at_degree((n - mode.degree_of(x).unwrap()) % n);
                assert_eq!(mode.add(x, inv).unwrap(), e, "inverse law");
                for &y in &elements {
                    assert_eq!(
                        mode.add(x, y).unwrap(),
                        mode.add(y, x).unwrap(),
                        "commutativity"
                    );
                    for &z in &elements {
                        assert_eq!(
                            mode.add(mode.add(x, y).unwrap(), z).unwrap(),
                            mode.add(x, mode.add(y, z).unwrap()).unwrap(),
                            "associativity"
                        );
                    }
                }
            }
        }

        // Torsor laws, and mode-index independence of the interval map.
        for &x in &elements {
            assert_eq!(scale.translate(0, x).unwrap(), x);
            for &y in &elements {
                let g = scale.interval(x, y).unwrap();
                assert_eq!(
                    scale.translate(g, x).unwrap(),
                    y,
                    "interval transports x to y"
                );
                for h in 0..n {
                    assert_eq!(
                        scale.translate(h, scale.translate(g, x).unwrap()).unwrap(),
                        scale.translate((g + h) % n, x).unwrap(),
                        "translation composes additively"
                    );
                }
                for index in 0..n {
                    let mode = Mode::of_scale(scale.clone(), index).unwrap();
                    let via_mode =
                        (mode.degree_of(y).unwrap() + n - mode.degree_of(x).unwrap()) % n;
                    assert_eq!(via_mode, g, "interval must not depend on the mode index");
                }
            }
        }
    }

    // Translates of a realization are exactly the realizations of rotations.
    for n in 1..=8 {
        let scale = scalar(n);
        for k in 1..=n {
            for sigma in enumerate_compositions(n, k).unwrap() {
                let base: BTreeSet<usize> = realize(&sigma, &scale, 0)
                    .unwrap()
                    .elements()
                    .iter()
                    .copied()
                    .collect();
                let translates: BTreeSet<Vec<usize>> = (0..n)
                    .map(|g| {
                        base.iter()
                            .map(|&x| scale.translate(g, x).unwrap())
                            .collect::<BTreeSet<_>>()
                    })
                    .map(|set| set.into_iter().collect())
                    .collect();
                let rotated: BTreeSet<Vec<usize>> = sigma
                    .rotations()
                    .iter()
                    .flat_map(|tau| {
                        (0..n).map(|x| realize(tau, &scale, x).unwrap().elements().to_vec())
                    })
                    .collect();
                assert_eq!(translates, rotated, "n={n}, sigma={sigma}");
            }
        }
    }

    // Primitive covers: nerve of dimension k-1 with exactly n top cells,
    // which are the harmonic regions; everything else is one of their faces.
    for n in 2..=9 {
        let scale = scalar(n);
        for k in 2..n {
            if gcd(n, k) != 1 {
                continue;
            }
            for sigma in enumerate_compositions(n, k).unwrap() {
                let cover = orbit_cover(&scale, &sigma, 0).unwrap();
                let nerve = build_nerve(&cover);
                assert_eq!(nerve.dim(), k - 1);
                assert_eq!(nerve.simplices_of_dim(k - 1).len(), n);
                let regions = harmonic_regions(&cover).unwrap();
                let tops: BTreeSet<Vec<usize>> =
                    nerve.simplices_of_dim(k - 1).iter().cloned().collect();
                let deltas: BTreeSet<Vec<usize>> =
                    regions.iter().map(|(_, d)| d.to_vec()).collect();
                assert_eq!(tops, deltas, "top simplices are the harmonic regions");
                for p in 0..k - 1 {
                    for simplex in nerve.simplices_of_dim(p) {
                        assert!(
                            deltas.iter().any(|d| simplex.iter().all(|v| d.contains(v))),
                            "simplex {simplex:?} is not a face of any region"
                        );
                    }
                }
            }
        }
    }

    // The unit action on compositions is a group action.
    for n in 1..=9 {
        let units = unit_group(n);
        for k in 1..=n {
            for sigma in enumerate_compositions(n, k).unwrap() {
                assert_eq!(sigma.u_transform(1).unwrap(), sigma, "u=1 acts trivially");
                for &u in &units {
                    let once = sigma.u_transform(u).unwrap();
                    for &v in &units {
                        assert_eq!(
                            once.u_transform(v).unwrap(),
                            sigma.u_transform(u * v % n).unwrap(),
                            "action is multiplicative: n={n}, sigma={sigma}, u={u}, v={v}"
                        );
                    }
                }
            }
        }
    }

    let elapsed = start.elapsed();
    pass(
        "group, torsor, rotation, nerve-structure, and unit-action laws all hold",
        elapsed,
    );
}

#[test]
fn descending_fifths_share_single_tones_pairwise_only() {
    let start = Instant::now();

    let chord_set = |scale: &Scale, sigma: &IntervalComposition, root: usize| {
        realize(sigma, scale, root)
            .unwrap()
            .elements()
            .iter()
            .copied()
            .collect::<BTreeSet<usize>>()
    };
    let check = |scale: &Scale, sigma: &IntervalComposition, start_root: usize, step: usize| {
        let n = scale.len();
        let roots: Vec<usize> = (0..n)
            .map(|i| scale.translate(step * i % n, start_root).unwrap())
            .collect();
        let chords: Vec<BTreeSet<usize>> =
            roots.iter().map(|&r| chord_set(scale, sigma, r)).collect();
        for i in 0..n {
            let a = &chords[i];
            let b = &chords[(i + 1) % n];
            let c = &chords[(i + 2) % n];
            assert_eq!(
                a.intersection(b).count(),
                1,
                "adjacent chords share one tone"
            );
            let surviving: Vec<usize> = a
                .intersection(b)
                .filter(|x| c.contains(x))
                .copied()
                .collect();
            assert!(
                surviving.is_empty(),
                "tone {surviving:?} survives three consecutive chords"
            );
        }
    };

    // Tertian chords over the major scale, roots falling by fifths
    // (three scale steps); the transported quartal cover walks by single
    // steps, since 5 * 3 = 15 = 1 mod 7.
    let f_major = scale_of(12, &[5, 7, 9, 10, 0, 2, 4]);
    check(&f_major, &comp(&[2, 2, 3]), 5, 3);
    let target = scale_of(12, &[4, 6, 7, 10, 0, 1, 3]);
    check(&target, &comp(&[3, 3, 1]), 4, 1);

    let elapsed = start.elapsed();
    pass(
        "fifth-related tertian chords and their quartal images share tones pairwise only",
        elapsed,
    );
}
