//! Report builders and rendering for the four subcommands. Human output is
//! a fixed plain-text layout (wrapped at the configured width); JSON output
//! is the same data in a stable field order. Both embed the tool version.

use std::fmt::Write as _;

use serde::Serialize;

use orbitcover_core::{
    affine_orbits, build_nerve, enumerate_compositions, harmonic_regions, homology,
    nerve_isomorphic, orbit_cover, rotation_classes, transport_cover, unit_group,
    verify_cover_morphism, HomologyProfile, Mode, OrbitCover, Scale, SimplicialComplex,
};

use crate::err::CliError;
use crate::parse;

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Output width for wrapped lists in human-readable reports; JSON ignores
/// it. Controlled by ORBITCOVER_WIDTH.
fn output_width() -> usize {
    std::env::var("ORBITCOVER_WIDTH")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .map(|w| w.clamp(40, 500))
        .unwrap_or(100)
}

fn header(out: &mut String, command_echo: &str) {
    let _ = writeln!(out, "orbitcover {VERSION}");
    let _ = writeln!(out, "{command_echo}");
    let _ = writeln!(out);
}

/// "(2,2,3)" for any integer sequence.
fn tuple<T: std::fmt::Display>(xs: &[T]) -> String {
    let body: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", body.join(","))
}

/// Items joined by spaces, wrapped at `width`, continuation lines indented
/// to the prefix.
fn wrapped(out: &mut String, prefix: &str, items: &[String], width: usize) {
    let indent = " ".repeat(prefix.len());
    let mut line = prefix.to_string();
    let mut first = true;
    for item in items {
        if !first && line.len() + 1 + item.len() > width {
            let _ = writeln!(out, "{line}");
            line = indent.clone();
            line.push_str(item);
        } else {
            if !line.is_empty() && !line.ends_with(' ') {
                line.push(' ');
            }
            line.push_str(item);
            first = false;
        }
    }
    let _ = writeln!(out, "{line}");
}

fn resolve_root(
    scale: &Scale,
    explicit: Option<usize>,
    mode_index: Option<usize>,
) -> Result<usize, CliError> {
    match (explicit, mode_index) {
        (Some(root), _) => Ok(root),
        (None, Some(i)) => Ok(Mode::of_scale(scale.clone(), i)?.tonic()),
        (None, None) => Ok(scale.at_degree(0)),
    }
}

fn stacked_members(cover: &OrbitCover) -> Vec<Vec<usize>> {
    (0..cover.members().len())
        .map(|i| cover.member_stacked(i))
        .collect()
}

fn chord_text(elements: &[usize]) -> String {
    let body: Vec<String> = elements.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", body.join(","))
}

#[derive(Serialize)]
struct NerveInvariants {
    f_vector: Vec<usize>,
    betti: Vec<usize>,
    torsion: Vec<Vec<u64>>,
    euler: i64,
}

impl NerveInvariants {
    fn of(complex: &SimplicialComplex, profile: &HomologyProfile) -> Self {
        Self {
            f_vector: complex.f_vector(),
            betti: profile.betti().to_vec(),
            torsion: profile.torsion().to_vec(),
            euler: profile.euler(),
        }
    }

    fn torsion_text(&self) -> String {
        if self.torsion.iter().all(|t| t.is_empty()) {
            "none".to_string()
        } else {
            let parts: Vec<String> = self
                .torsion
                .iter()
                .enumerate()
                .filter(|(_, t)| !t.is_empty())
                .map(|(p, t)| format!("H_{p}: {}", tuple(t)))
                .collect();
            parts.join(" ")
        }
    }

    fn summary(&self) -> String {
        format!(
            "f-vector {}, betti {}, torsion {}, euler {}",
            tuple(&self.f_vector),
            tuple(&self.betti),
            self.torsion_text(),
            self.euler
        )
    }
}

// ---------------------------------------------------------------- classify

#[derive(Serialize)]
struct ClassEntry {
    representative: Vec<usize>,
    members: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct WitnessEntry {
    from: Vec<usize>,
    to: Vec<usize>,
    unit: usize,
}

#[derive(Serialize)]
struct OrbitEntry {
    classes: Vec<Vec<usize>>,
    witnesses: Vec<WitnessEntry>,
    nerve: NerveInvariants,
}

#[derive(Serialize)]
struct ClassifyReport {
    version: &'static str,
    command: &'static str,
    n: usize,
    k: usize,
    compositions: usize,
    rotation_classes: Vec<ClassEntry>,
    affine_orbits: Vec<OrbitEntry>,
}

pub fn classify(n: usize, k: usize, json: bool) -> Result<String, CliError> {
    let compositions =
        enumerate_compositions(n, k).map_err(|e| CliError::Usage(format!("classify: {e}")))?;
    let classes = rotation_classes(n, k).expect("shape validated above");
    let orbits = affine_orbits(n, k).expect("shape validated above");

    let scalar = Scale::new(
        orbitcover_core::PitchClassSet::new(n, 0..n).expect("positive n validated above"),
    );
    let report = ClassifyReport {
        version: VERSION,
        command: "classify",
        n,
        k,
        compositions: compositions.len(),
        rotation_classes: classes
            .iter()
            .map(|c| ClassEntry {
                representative: c.representative().parts().to_vec(),
                members: c.members().iter().map(|m| m.parts().to_vec()).collect(),
            })
            .collect(),
        affine_orbits: orbits
            .iter()
            .map(|orbit| {
                let cover = orbit_cover(&scalar, orbit.classes()[0].representative(), 0)
                    .expect("scalar scale fits any sigma of total n");
                let nerve = build_nerve(&cover);
                let profile = homology(&nerve);
                OrbitEntry {
                    classes: orbit
                        .classes()
                        .iter()
                        .map(|c| c.representative().parts().to_vec())
                        .collect(),
                    witnesses: orbit
                        .witnesses()
                        .iter()
                        .map(|w| WitnessEntry {
                            from: orbit.classes()[w.from].representative().parts().to_vec(),
                            to: orbit.classes()[w.to].representative().parts().to_vec(),
                            unit: w.unit,
                        })
                        .collect(),
                    nerve: NerveInvariants::of(&nerve, &profile),
                }
            })
            .collect(),
    };

    if json {
        return Ok(to_json(&report));
    }
    let width = output_width();
    let mut out = String::new();
    header(&mut out, &format!("classify n={n} k={k}"));
    let _ = writeln!(out, "compositions: {}", report.compositions);
    let _ = writeln!(out, "rotation classes: {}", report.rotation_classes.len());
    for class in &report.rotation_classes {
        let items: Vec<String> = class.members.iter().map(|m| tuple(m)).collect();
        wrapped(
            &mut out,
            &format!("  [{}]:", tuple(&class.representative)),
            &items,
            width,
        );
    }
    let _ = writeln!(out, "affine orbits: {}", report.affine_orbits.len());
    for (i, orbit) in report.affine_orbits.iter().enumerate() {
        let classes: Vec<String> = orbit
            .classes
            .iter()
            .map(|c| format!("[{}]", tuple(c)))
            .collect();
        wrapped(&mut out, &format!("  orbit {}:", i + 1), &classes, width);
        let _ = writeln!(out, "    nerve: {}", orbit.nerve.summary());
        let units: Vec<String> = orbit
            .witnesses
            .iter()
            .map(|w| format!("[{}]->[{}] u={}", tuple(&w.from), tuple(&w.to), w.unit))
            .collect();
        wrapped(&mut out, "    units:", &units, width);
    }
    Ok(out)
}

// ------------------------------------------------------------------- nerve

#[derive(Serialize)]
struct NerveReport {
    version: &'static str,
    command: &'static str,
    root: usize,
    primitive: bool,
    cover: OrbitCover,
    nerve: SimplicialComplex,
    homology: HomologyProfile,
    /// `(element, member indices)` pairs; absent for non-primitive covers.
    harmonic_regions: Option<Vec<(usize, Vec<usize>)>>,
}

pub fn nerve(
    scale: &str,
    sigma: &str,
    root: Option<usize>,
    mode_index: Option<usize>,
    json: bool,
) -> Result<String, CliError> {
    let scale_echo = scale;
    let sigma_echo = sigma;
    let scale = parse::parse_scale(scale)?;
    let sigma = parse::parse_sigma(sigma)?;
    let root = resolve_root(&scale, root, mode_index)?;
    let cover = orbit_cover(&scale, &sigma, root)?;
    let complex = build_nerve(&cover);
    let profile = homology(&complex);
    let regions = if cover.is_primitive() {
        Some(
            harmonic_regions(&cover)
                .expect("cover is primitive")
                .iter()
                .map(|(x, d)| (x, d.to_vec()))
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };

    let invariants = NerveInvariants::of(&complex, &profile);
    let stacked = stacked_members(&cover);
    let report = NerveReport {
        version: VERSION,
        command: "nerve",
        root,
        primitive: cover.is_primitive(),
        cover,
        nerve: complex,
        homology: profile,
        harmonic_regions: regions,
    };

    if json {
        return Ok(to_json(&report));
    }
    let mut out = String::new();
    header(
        &mut out,
        &format!("nerve scale=\"{scale_echo}\" sigma={sigma_echo} root={root}"),
    );
    let distinct = report.cover.distinct_members().len();
    let _ = writeln!(
        out,
        "cover: {}, {} distinct member{}",
        if report.primitive {
            "primitive"
        } else {
            "not primitive"
        },
        distinct,
        if distinct == 1 { "" } else { "s" }
    );
    for (i, member) in stacked.iter().enumerate() {
        let _ = writeln!(out, "  C{i} = {}", chord_text(member));
    }
    let _ = writeln!(out, "f-vector: {}", tuple(&invariants.f_vector));
    let _ = writeln!(out, "betti: {}", tuple(&invariants.betti));
    let _ = writeln!(out, "torsion: {}", invariants.torsion_text());
    let _ = writeln!(out, "euler characteristic: {}", invariants.euler);
    match &report.harmonic_regions {
        Some(regions) => {
            let _ = writeln!(out, "harmonic regions:");
            for (x, delta) in regions {
                let _ = writeln!(out, "  {x} -> {}", chord_text(delta));
            }
        }
        None => {
            let _ = writeln!(out, "harmonic regions: none (cover is not primitive)");
        }
    }
    Ok(out)
}

// --------------------------------------------------------------- transport

#[derive(Serialize)]
struct TransportReport {
    version: &'static str,
    command: &'static str,
    u: usize,
    v: usize,
    root: usize,
    source: OrbitCover,
    image: OrbitCover,
    /// `(x, f(x))` pairs in scale order from the root.
    map: Vec<(usize, usize)>,
    /// Image member index of each source member.
    index_map: Vec<usize>,
    morphism_verified: bool,
    events: Option<Vec<(usize, usize)>>,
}

#[allow(clippy::too_many_arguments)]
pub fn transport(
    source: &str,
    sigma: &str,
    u: usize,
    v: usize,
    target: &str,
    root: Option<usize>,
    mode_index: Option<usize>,
    events: Option<&std::path::Path>,
    json: bool,
) -> Result<String, CliError> {
    let source_echo = source;
    let sigma_echo = sigma;
    let target_echo = target;
    let source = parse::parse_scale(source)?;
    let sigma = parse::parse_sigma(sigma)?;
    let target = parse::parse_scale(target)?;
    let root = resolve_root(&source, root, mode_index)?;
    let cover = orbit_cover(&source, &sigma, root)?;
    let transport = transport_cover(&cover, u, v, &target)?;

    let event_pairs = match events {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
            let residues = parse::parse_events(&text, &path.display().to_string())?;
            Some(
                residues
                    .into_iter()
                    .map(|x| transport.apply(x).map(|y| (x, y)).map_err(CliError::from))
                    .collect::<Result<Vec<_>, _>>()?,
            )
        }
        None => None,
    };

    let morphism = transport.as_morphism();
    let report = TransportReport {
        version: VERSION,
        command: "transport",
        u: transport.unit(),
        v: transport.offset(),
        root,
        map: transport.pairs().to_vec(),
        index_map: (0..cover.members().len())
            .map(|i| transport.index_image(i))
            .collect(),
        morphism_verified: verify_cover_morphism(&morphism, &cover, transport.image()),
        source: cover,
        image: transport.image().clone(),
        events: event_pairs,
    };

    if json {
        return Ok(to_json(&report));
    }
    let mut out = String::new();
    header(
        &mut out,
        &format!(
            "transport source=\"{source_echo}\" sigma={sigma_echo} u={u} v={v} \
             target=\"{target_echo}\" root={root}"
        ),
    );
    let _ = writeln!(out, "pointwise map:");
    for &(x, y) in &report.map {
        let _ = writeln!(out, "  {x} -> {y}");
    }
    let _ = writeln!(out, "image sigma: {}", tuple(report.image.sigma().parts()));
    let _ = writeln!(out, "image root: {}", report.image.root());
    let _ = writeln!(out, "image members:");
    for (i, member) in stacked_members(&report.image).iter().enumerate() {
        let _ = writeln!(out, "  V{i} = {}", chord_text(member));
    }
    let member_map: Vec<String> = report
        .index_map
        .iter()
        .enumerate()
        .map(|(i, &j)| format!("C{i}->V{j}"))
        .collect();
    wrapped(&mut out, "member map:", &member_map, output_width());
    let _ = writeln!(
        out,
        "morphism check: {}",
        if report.morphism_verified {
            "ok"
        } else {
            "FAILED"
        }
    );
    if let Some(pairs) = &report.events {
        let _ = writeln!(out, "events ({}):", pairs.len());
        for &(x, y) in pairs {
            let _ = writeln!(out, "  {x} -> {y}");
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------- isocheck

#[derive(Serialize)]
struct IsocheckSide {
    spec: String,
    cover: OrbitCover,
    f_vector: Vec<usize>,
}

#[derive(Serialize)]
struct IsocheckReport {
    version: &'static str,
    command: &'static str,
    a: IsocheckSide,
    b: IsocheckSide,
    witness: Option<Vec<usize>>,
    affine_applicable: bool,
    affine_unit: Option<usize>,
    /// "ok" when both methods agree, "mismatch" when they disagree, "n/a"
    /// when the affine criterion does not apply.
    agreement: &'static str,
}

pub fn isocheck(a: &str, b: &str, json: bool) -> Result<String, CliError> {
    let (scale_a, sigma_a, root_a) = parse::parse_cover_spec(a)?;
    let (scale_b, sigma_b, root_b) = parse::parse_cover_spec(b)?;
    let root_a = resolve_root(&scale_a, root_a, None)?;
    let root_b = resolve_root(&scale_b, root_b, None)?;
    let cover_a = orbit_cover(&scale_a, &sigma_a, root_a)?;
    let cover_b = orbit_cover(&scale_b, &sigma_b, root_b)?;
    let nerve_a = build_nerve(&cover_a);
    let nerve_b = build_nerve(&cover_b);
    let witness = nerve_isomorphic(&nerve_a, &nerve_b);

    // The affine criterion classifies primitive covers of a common (n, k).
    let applicable = scale_a.len() == scale_b.len()
        && sigma_a.len() == sigma_b.len()
        && cover_a.is_primitive()
        && cover_b.is_primitive();
    let affine_unit = if applicable {
        let target = sigma_b.canonical_rotation();
        unit_group(scale_a.len()).into_iter().find(|&u| {
            sigma_a
                .u_transform(u)
                .expect("u is a unit")
                .canonical_rotation()
                == target
        })
    } else {
        None
    };
    let agreement = if !applicable {
        "n/a"
    } else if witness.is_some() == affine_unit.is_some() {
        "ok"
    } else {
        "mismatch"
    };

    let report = IsocheckReport {
        version: VERSION,
        command: "isocheck",
        a: IsocheckSide {
            spec: a.to_string(),
            f_vector: nerve_a.f_vector(),
            cover: cover_a,
        },
        b: IsocheckSide {
            spec: b.to_string(),
            f_vector: nerve_b.f_vector(),
            cover: cover_b,
        },
        witness,
        affine_applicable: applicable,
        affine_unit,
        agreement,
    };

    if json {
        return Ok(to_json(&report));
    }
    let mut out = String::new();
    header(&mut out, &format!("isocheck A=\"{a}\" B=\"{b}\""));
    for (name, side) in [("A", &report.a), ("B", &report.b)] {
        let _ = writeln!(
            out,
            "{name}: n={} sigma={} f-vector {}",
            side.cover.scale().len(),
            tuple(side.cover.sigma().parts()),
            tuple(&side.f_vector)
        );
    }
    match &report.witness {
        Some(map) => {
            let _ = writeln!(out, "nerve isomorphic: yes");
            let items: Vec<String> = map
                .iter()
                .enumerate()
                .map(|(i, &j)| format!("{i}->{j}"))
                .collect();
            wrapped(&mut out, "witness:", &items, output_width());
        }
        None => {
            let _ = writeln!(out, "nerve isomorphic: no");
        }
    }
    let affine_text = if !report.affine_applicable {
        "not applicable".to_string()
    } else {
        match report.affine_unit {
            Some(u) => format!("same orbit, unit u={u}"),
            None => "different orbits".to_string(),
        }
    };
    let _ = writeln!(out, "affine criterion: {affine_text}");
    let _ = writeln!(out, "agreement: {}", report.agreement);
    Ok(out)
}

fn to_json<T: Serialize>(report: &T) -> String {
    let mut text = serde_json::to_string(report).expect("reports serialize");
    text.push('\n');
    text
}
