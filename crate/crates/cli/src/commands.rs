use std::collections::BTreeMap;

use serde::Serialize;

use cce_core::closure::{
    jacobi_spot_check, standard_injection, verify_embedding, EmbeddingReport,
};
use cce_core::commutant::CatalogJson;
use cce_core::golden::{compare_catalog, GoldenComparison};
use cce_core::liealg::RootSystemJson;
use cce_core::quantize::{filtration_dim, pbw_monomials, verify_quantization, QuantizationReport};
use cce_core::superint::{certify_system, default_integrals, Certificate, Hamiltonian};
use cce_core::{build_catalog, close_catalog, AlgebraType, Enveloping, GeneratorCatalog, LieAlgebra, PbwElement};

use crate::output::{csv, emit, json, render};
use crate::{CommonArgs, Failure, Format};

fn catalog(alg: &LieAlgebra, common: &CommonArgs) -> Result<GeneratorCatalog, Failure> {
    Ok(build_catalog(&alg.roots, common.max_degree)?)
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn roots(ty: AlgebraType, common: &CommonArgs) -> Result<(), Failure> {
    let alg = LieAlgebra::new(ty)?;
    let rs = &alg.roots;
    let names = alg.coordinate_names(Default::default());
    let doc = RootSystemJson::new(&alg);
    let body = render(
        common,
        || {
            let mut s = format!("{ty}: dim {}, {} positive roots\n", alg.dim(), rs.num_positive());
            s.push_str("positive roots (coefficients, weights):\n");
            for (k, r) in rs.positive().iter().enumerate() {
                s.push_str(&format!(
                    "  {:<6} [{}]  ({})\n",
                    names[alg.root_coordinate(k)],
                    join(&r.coeffs, ", "),
                    join(&(0..rs.rank()).map(|i| rs.weight_of(k, i)).collect::<Vec<_>>(), ", ")
                ));
            }
            s.push_str("simple roots:\n");
            for r in rs.simple() {
                s.push_str(&format!("  [{}]\n", join(&r.coeffs, ", ")));
            }
            s.push_str("Cartan matrix:\n");
            for row in rs.cartan_matrix() {
                s.push_str(&format!("  {}\n", row.iter().map(|x| format!("{x:>3}")).collect::<String>()));
            }
            s
        },
        &doc,
        || {
            let rows = rs
                .roots()
                .iter()
                .enumerate()
                .map(|(k, r)| {
                    vec![
                        names[alg.root_coordinate(k)].clone(),
                        join(&r.coeffs, " "),
                        join(&(0..rs.rank()).map(|i| rs.weight_of(k, i)).collect::<Vec<_>>(), " "),
                        rs.is_positive(k).to_string(),
                    ]
                })
                .collect();
            (vec!["name", "root", "weights", "positive"], rows)
        },
    );
    emit(common, &body)
}

fn abelian(cat: &GeneratorCatalog, alg: &LieAlgebra) -> Option<bool> {
    if cat.total() > 40 {
        return None;
    }
    let polys: Vec<_> = cat.generators().map(|id| cat.polynomial(id, alg)).collect();
    Some(polys.iter().enumerate().all(|(i, p)| {
        polys[i + 1..]
            .iter()
            .all(|q| cce_core::polyalg::poisson_bracket(p, q, &alg.sc).is_ok_and(|b| b.is_zero()))
    }))
}

#[derive(Serialize)]
struct GeneratorsDoc {
    catalog: CatalogJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    comparison: Option<GoldenComparison>,
}

fn layer_line(cartan: usize, layers: &[usize], total: usize) -> String {
    let mut v = vec![cartan];
    v.extend_from_slice(layers);
    format!("layers {} total {total}", join(&v, ","))
}

pub fn generators(ty: AlgebraType, common: &CommonArgs, compare: bool) -> Result<(), Failure> {
    let alg = LieAlgebra::new(ty)?;
    let cat = catalog(&alg, common)?;
    let comparison = if compare {
        Some(compare_catalog(&cat).ok_or_else(|| {
            Failure::Usage(format!("no reference table for {ty}; available: B2, B3, C3, D2, D3"))
        })?)
    } else {
        None
    };
    let counts = cat.nonzero_layer_counts();
    let doc = GeneratorsDoc {
        catalog: cat.to_json(&alg.roots),
        comparison: comparison.clone(),
    };
    let body = render(
        common,
        || {
            let mut s = format!("{ty}: {}\n", layer_line(cat.rank(), &counts, cat.total()));
            s.push_str(&format!(
                "maximal degree {}{}\n",
                cat.zeta(),
                if cat.is_complete() { "" } else { " (enumeration truncated)" }
            ));
            if abelian(&cat, &alg) == Some(true) {
                s.push_str("all generators Poisson-commute (abelian)\n");
            }
            s.push_str(&format!(
                "cartan: {}\n",
                join(&(0..cat.rank()).map(|i| cat.name(i)).collect::<Vec<_>>(), " ")
            ));
            for (&d, &n) in cat.layer_counts().iter().filter(|(_, &n)| n > 0) {
                s.push_str(&format!("degree {d} ({n}):\n"));
                for m in cat.layer(d) {
                    s.push_str(&format!("  {}\n", m.name(&alg.roots)));
                }
            }
            if let Some(c) = &comparison {
                s.push_str(&format!(
                    "{}: {}\n",
                    layer_line(cat.rank(), &counts, cat.total()),
                    if c.matches { "MATCH" } else { "MISMATCH" }
                ));
                if !c.matches {
                    s.push_str(&format!(
                        "reference {}\n",
                        layer_line(c.expected.cartan, &c.expected.layer_list(), c.expected.total)
                    ));
                    for d in &c.diffs {
                        s.push_str(&format!("  {d}\n"));
                    }
                }
            }
            s
        },
        &doc,
        || {
            let mut rows: Vec<Vec<String>> = (0..cat.rank())
                .map(|i| vec!["1".into(), cat.name(i), String::new()])
                .collect();
            for m in cat.monomials() {
                rows.push(vec![
                    m.degree().to_string(),
                    m.name(&alg.roots),
                    join(&m.roots().iter().map(|&k| alg.roots.root(k).to_string()).collect::<Vec<_>>(), " "),
                ]);
            }
            (vec!["degree", "name", "roots"], rows)
        },
    );
    emit(common, &body)?;
    match comparison {
        Some(c) if !c.matches => Err(Failure::Verification(format!(
            "{ty} layer counts differ from the reference: {}",
            c.diffs.join("; ")
        ))),
        _ => Ok(()),
    }
}

fn degree_word(d: usize) -> &'static str {
    match d {
        0 => "abelian",
        1 => "linear",
        2 => "quadratic",
        3 => "cubic",
        4 => "quartic",
        5 => "quintic",
        6 => "sextic",
        _ => "higher",
    }
}

#[derive(Serialize)]
struct CloseDoc {
    #[serde(rename = "type")]
    ty: String,
    generators: usize,
    degree: usize,
    total_factor_degree: usize,
    exhaustive_degree: usize,
    nonzero_brackets: usize,
    jacobi_triples: usize,
    jacobi_exhaustive: bool,
    hat_failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    brackets: Option<cce_core::closure::BracketsJson>,
}

pub fn close(ty: AlgebraType, common: &CommonArgs, full: bool, samples: usize) -> Result<(), Failure> {
    let alg = LieAlgebra::new(ty)?;
    let cat = catalog(&alg, common)?;
    let tbl = close_catalog(&cat, &alg)?;
    let n = cat.total();
    let exhaustive = n * n.saturating_sub(1) * n.saturating_sub(2) / 6 <= 20_000;
    let jac = jacobi_spot_check(&tbl, &cat, &alg, (!exhaustive).then_some(samples), common.seed)?;
    let hat = cce_core::closure::hat_antihomomorphism_failures(&tbl, &cat, &alg)?;
    let doc = CloseDoc {
        ty: ty.to_string(),
        generators: n,
        degree: tbl.degree(),
        total_factor_degree: tbl.total_factor_degree(),
        exhaustive_degree: tbl.exhaustive_degree(),
        nonzero_brackets: tbl.nonzero_count(),
        jacobi_triples: jac.triples.len(),
        jacobi_exhaustive: jac.exhaustive,
        hat_failures: hat.len(),
        brackets: full.then(|| tbl.to_json(&cat)),
    };
    let body = render(
        common,
        || {
            let mut s = format!("{ty}: {n} generators, {} nonzero brackets\n", tbl.nonzero_count());
            s.push_str(&format!("degree d = {} ({})\n", tbl.degree(), degree_word(tbl.degree())));
            s.push_str(&format!(
                "factors per term incl. Cartan: {}; exhaustive maximum: {}\n",
                tbl.total_factor_degree(),
                tbl.exhaustive_degree()
            ));
            s.push_str(&format!(
                "Jacobi identity: {} triples{}, all zero\n",
                jac.triples.len(),
                if jac.exhaustive { " (exhaustive)" } else { " (sampled)" }
            ));
            s.push_str(&format!("hat involution reverses brackets: {}\n", if hat.is_empty() { "yes" } else { "NO" }));
            let report = tbl.degree_report(&cat);
            if !report.is_empty() {
                s.push_str("degree pattern (A = Cartan, B = quadratic, ...):\n");
                for line in report.lines() {
                    s.push_str(&format!("  {line}\n"));
                }
            }
            if full {
                for e in tbl.entries().iter().filter(|e| !e.bracket.is_zero()) {
                    s.push_str(&format!(
                        "{{{}, {}}} = {}\n",
                        cat.name(e.left),
                        cat.name(e.right),
                        e.expression.render(&cat)
                    ));
                }
            }
            s
        },
        &doc,
        || {
            let rows = tbl
                .entries()
                .iter()
                .filter(|e| !e.bracket.is_zero())
                .map(|e| {
                    vec![
                        cat.name(e.left),
                        cat.name(e.right),
                        e.degree.to_string(),
                        e.expression.render(&cat),
                    ]
                })
                .collect();
            (vec!["left", "right", "degree", "expression"], rows)
        },
    );
    emit(common, &body)?;
    if !hat.is_empty() {
        return Err(Failure::Verification(format!("{} brackets break the hat involution", hat.len())));
    }
    Ok(())
}

pub fn certify(ty: AlgebraType, common: &CommonArgs) -> Result<(), Failure> {
    let alg = LieAlgebra::new(ty)?;
    let cat = catalog(&alg, common)?;
    let h = Hamiltonian::quadratic_cartan(&alg, common.seed);
    let ints = default_integrals(&cat, &alg)?;
    let cert: Certificate = certify_system(&h, &ints, &cat, &alg, common.seed)?;
    let doc = json(&cert);
    let path = common.out.clone().unwrap_or_else(|| "certificate.json".into());
    std::fs::write(&path, &doc)?;
    match common.format {
        Format::Json => print!("{doc}"),
        Format::Csv => print!(
            "{}",
            csv(
                &["type", "rank", "bound", "integrals_besides_hamiltonian", "superintegrability_bound"],
                &[vec![
                    cert.ty.clone(),
                    cert.rank.to_string(),
                    cert.bound.to_string(),
                    cert.integrals_besides_hamiltonian.to_string(),
                    cert.superintegrability_bound.to_string()
                ]]
            )
        ),
        Format::Text => {
            println!("{ty}: H = {}", cert.hamiltonian);
            println!("{} integrals, all commute with H", cert.integrals.len());
            println!("rank {}, bound {}", cert.rank, cert.bound);
            println!(
                "independent integrals besides H: {} (bound {})",
                cert.integrals_besides_hamiltonian, cert.superintegrability_bound
            );
            if cert.integrals_commute {
                println!("integrals commute pairwise: integrable");
            }
            println!("certificate written to {}", path.display());
        }
    }
    if !cert.bound_holds {
        return Err(Failure::Verification("rank exceeds the counting bound".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct QuantizeDoc {
    report: QuantizationReport,
    sampled_pairs: bool,
    filtration: Vec<FiltrationRow>,
    casimir_central: bool,
}

#[derive(Serialize)]
struct FiltrationRow {
    k: usize,
    dim: String,
    monomials: usize,
}

pub fn quantize(ty: AlgebraType, common: &CommonArgs, samples: usize) -> Result<(), Failure> {
    if ty.rank() > cce_core::quantize::MAX_QUANTIZE_RANK {
        return Err(Failure::Usage(format!(
            "quantize supports rank <= {} (got {ty})",
            cce_core::quantize::MAX_QUANTIZE_RANK
        )));
    }
    let alg = LieAlgebra::new(ty)?;
    let cat = catalog(&alg, common)?;
    let n = cat.total();
    let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let sampled = all.len() > 500;
    let pairs: Vec<(usize, usize)> = if sampled {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(common.seed);
        let mut p: Vec<_> = all.choose_multiple(&mut rng, samples).copied().collect();
        p.sort_unstable();
        p
    } else {
        all
    };
    let report = verify_quantization(&alg, &cat, Some(&pairs))?;
    let filtration: Vec<FiltrationRow> = (0..=4)
        .map(|k| FiltrationRow {
            k,
            dim: filtration_dim(&alg.sc, k).to_string(),
            monomials: pbw_monomials(alg.dim(), k).len(),
        })
        .collect();
    let casimir_central = {
        let mut env = Enveloping::new(&alg.sc);
        let c = env.symmetrize(&alg.quadratic_casimir()?);
        (0..alg.dim()).all(|i| env.commutator(&PbwElement::generator(i), &c).is_zero())
    };
    let filtration_ok = filtration.iter().all(|r| r.dim == r.monomials.to_string());
    let cartan_names = join(&(1..=ty.rank()).map(|i| format!("H_{i}")).collect::<Vec<_>>(), ",");
    let doc = QuantizeDoc {
        report,
        sampled_pairs: sampled,
        filtration,
        casimir_central,
    };
    let r = &doc.report;
    let body = render(
        common,
        || {
            let mut s = String::new();
            if r.cartan_commuting == r.non_cartan {
                s.push_str(&format!(
                    "all {} non-Cartan generators commute with {cartan_names}\n",
                    r.non_cartan
                ));
            } else {
                s.push_str(&format!(
                    "{} of {} non-Cartan generators commute with {cartan_names}\n",
                    r.cartan_commuting, r.non_cartan
                ));
            }
            s.push_str(&format!(
                "symmetrized quadratic Casimir is central: {}\n",
                if doc.casimir_central { "yes" } else { "NO" }
            ));
            s.push_str("filtration dimensions (binomial / monomial count):\n");
            for f in &doc.filtration {
                s.push_str(&format!("  k={}: {} / {}\n", f.k, f.dim, f.monomials));
            }
            s.push_str(&format!(
                "pairs checked: {}{}\n",
                r.pairs_checked,
                if doc.sampled_pairs { " (sampled)" } else { "" }
            ));
            s.push_str("degree profile (deg p, deg q: deg [P,Q], deg [P,Q] - Λ{p,q}, pairs):\n");
            let fmt = |d: Option<usize>| d.map_or("-".to_string(), |d| d.to_string());
            for row in &r.profile {
                s.push_str(&format!(
                    "  {}, {}: {}, {}, {}\n",
                    row.left_degree,
                    row.right_degree,
                    fmt(row.commutator_degree),
                    fmt(row.correction_degree),
                    row.count
                ));
            }
            for f in &r.failures {
                s.push_str(&format!("FAIL {f}\n"));
            }
            s
        },
        &doc,
        || {
            let fmt = |d: Option<usize>| d.map_or(String::new(), |d| d.to_string());
            let rows = r
                .profile
                .iter()
                .map(|row| {
                    vec![
                        row.left_degree.to_string(),
                        row.right_degree.to_string(),
                        fmt(row.commutator_degree),
                        fmt(row.correction_degree),
                        row.count.to_string(),
                    ]
                })
                .collect();
            (vec!["left_degree", "right_degree", "commutator_degree", "correction_degree", "count"], rows)
        },
    );
    emit(common, &body)?;
    if !r.holds() || !casimir_central || !filtration_ok {
        return Err(Failure::Verification(
            r.failures.first().cloned().unwrap_or_else(|| "enveloping-algebra check failed".into()),
        ));
    }
    Ok(())
}

#[derive(Serialize)]
struct EmbedRow {
    sub: String,
    sup: String,
    holds: bool,
    images: BTreeMap<String, String>,
    failures: Vec<String>,
}

pub fn embed(common: &CommonArgs, chains: &[String]) -> Result<(), Failure> {
    let chains: Vec<String> = if chains.is_empty() {
        vec!["A2,A3".into(), "A2,D3,B3".into(), "A2,C3".into()]
    } else {
        chains.to_vec()
    };
    let mut rows = Vec::new();
    for chain in &chains {
        let types: Vec<AlgebraType> = chain
            .split(',')
            .map(|t| AlgebraType::parse(t.trim()))
            .collect::<cce_core::Result<_>>()?;
        if types.len() < 2 {
            return Err(Failure::Usage(format!("chain `{chain}` needs at least two types")));
        }
        for w in types.windows(2) {
            let sub = LieAlgebra::new(w[0])?;
            let sup = LieAlgebra::new(w[1])?;
            let inj = standard_injection(&sub, &sup).map_err(|e| Failure::Usage(e.to_string()))?;
            let sc = catalog(&sub, common)?;
            let tc = catalog(&sup, common)?;
            let r: EmbeddingReport = verify_embedding(&sub, &sc, &sup, &tc, &inj)?;
            rows.push(EmbedRow {
                sub: w[0].to_string(),
                sup: w[1].to_string(),
                holds: r.holds,
                images: r.images.into_iter().collect(),
                failures: r.failures,
            });
        }
    }
    let body = render(
        common,
        || {
            let mut s = String::new();
            for r in &rows {
                s.push_str(&format!(
                    "{} -> {}: {} ({} generators mapped)\n",
                    r.sub,
                    r.sup,
                    if r.holds { "OK" } else { "FAIL" },
                    r.images.len()
                ));
                for f in &r.failures {
                    s.push_str(&format!("  {f}\n"));
                }
            }
            s
        },
        &rows,
        || {
            let t = rows
                .iter()
                .flat_map(|r| {
                    r.images
                        .iter()
                        .map(|(a, b)| vec![r.sub.clone(), r.sup.clone(), a.clone(), b.clone(), r.holds.to_string()])
                })
                .collect();
            (vec!["sub", "sup", "generator", "image", "holds"], t)
        },
    );
    emit(common, &body)?;
    if rows.iter().any(|r| !r.holds) {
        return Err(Failure::Verification("embedding check failed".into()));
    }
    Ok(())
}
