//! Command-line front end: ingest algebra/order description files or
//! compiled-in presets, dispatch to the library, and emit human-readable
//! tables plus a stable machine format.
//!
//! Exit status: 0 on success, 1 on a domain error (the library's message is
//! printed verbatim), 2 on a usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::process::ExitCode;

use ncspec::algebra::descr;
use ncspec::coeff::{base_max_ideals, parse_base, BaseMaxIdeal, BaseRing, FiniteField};
use ncspec::order::{self, presets, FiberSelector, Order, OrderAlgebra, SpecPoint};
use ncspec::procesi;
use ncspec::ring::Ring;
use ncspec::structure;
use ncspec::zeta;

#[derive(Parser)]
#[command(name = "ncspec", version, about = "Exact spectra and Hasse zeta functions of algebras finite over their centers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Args)]
struct InputArgs {
    /// Compiled-in preset: s3, c2, mat2, gauss, dihedral
    #[arg(long, conflicts_with = "file")]
    preset: Option<String>,
    /// Algebra description file (base, basis, mul lines)
    #[arg(long)]
    file: Option<String>,
    /// Base ring for presets: Z, GF(p^k) or GF(p^k)[T]
    #[arg(long, conflicts_with = "file")]
    base: Option<String>,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Center of an algebra over a finite field
    Center(InputArgs),
    /// Jacobson radical of an algebra over a finite field
    Radical(InputArgs),
    /// Wedderburn block data of an algebra over a finite field
    Wedderburn(InputArgs),
    /// Closed points over selected maximal ideals of the base
    Points {
        #[command(flatten)]
        input: InputArgs,
        /// A base maximal ideal: a prime for Z, a monic irreducible in T
        /// for GF(q)[T] (repeatable)
        #[arg(long)]
        fiber: Vec<String>,
        /// All fibers with p (or deg f) up to the bound
        #[arg(long)]
        fibers_up_to: Option<u64>,
    },
    /// Spec poset with closure relations
    Spec {
        #[command(flatten)]
        input: InputArgs,
        /// Localize a Z-order at a prime (selects that single fiber)
        #[arg(long)]
        localize: Option<u64>,
        /// Include the generic minimal primes (base Z)
        #[arg(long)]
        generic: bool,
    },
    /// Zeta series in u = q^{-s} for an order over GF(q) or GF(q)[T]
    Zeta {
        #[command(flatten)]
        input: InputArgs,
        /// Truncation degree of the series (at least 1)
        #[arg(short = 'D', long = "degree", value_parser = clap::value_parser!(u32).range(1..))]
        degree: u32,
    },
    /// Dirichlet coefficients a_1..a_N for an order over Z
    Dirichlet {
        #[command(flatten)]
        input: InputArgs,
        /// Number of coefficients (at least 1)
        #[arg(short = 'N', long = "limit", value_parser = clap::value_parser!(u32).range(1..))]
        limit: u32,
    },
    /// Tensor product B (x)_F C of two algebras over their base field
    Tensor {
        #[command(flatten)]
        input: InputArgs,
        /// The second factor: a preset name
        #[arg(long)]
        with: String,
    },
    /// A-algebra condition checks for a morphism, with a pullback
    /// demonstration when the condition fails
    CheckMorphism {
        /// Morphism description file ([source]/[target]/[map] sections)
        #[arg(long, conflicts_with_all = ["preset", "base"])]
        file: Option<String>,
        /// Compiled-in morphism preset: diag2 (F_p x F_p into M_2(F_p))
        #[arg(long)]
        preset: Option<String>,
        /// Base field for morphism presets
        #[arg(long)]
        base: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Smallest open neighborhood of a closed point in a Spec poset
    Neighborhood {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        localize: Option<u64>,
        /// 1-based index of the closed point in the poset listing
        #[arg(long)]
        point: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::FAILURE
        }
    }
}

fn run(cmd: Command) -> Result<String, String> {
    match cmd {
        Command::Center(input) => {
            let a = load_field_algebra(&input)?;
            let z = a.center();
            let mut out = String::new();
            if input.format == Format::Text {
                let _ = writeln!(out, "center: dimension {}", z.dim());
                for v in z.basis() {
                    let _ = writeln!(out, "  {}", a.fmt_vec(v));
                }
            } else {
                let _ = writeln!(out, "center dim={}", z.dim());
                for v in z.basis() {
                    let _ = writeln!(out, "basis {}", a.fmt_vec(v));
                }
            }
            Ok(out)
        }
        Command::Radical(input) => {
            let a = load_field_algebra(&input)?;
            let j = structure::radical(&a);
            let mut out = String::new();
            if input.format == Format::Text {
                let _ = writeln!(out, "radical: dimension {}", j.dim());
                for v in j.space().basis() {
                    let _ = writeln!(out, "  {}", a.fmt_vec(v));
                }
            } else {
                let _ = writeln!(out, "radical dim={}", j.dim());
                for v in j.space().basis() {
                    let _ = writeln!(out, "basis {}", a.fmt_vec(v));
                }
            }
            Ok(out)
        }
        Command::Wedderburn(input) => {
            let a = load_field_algebra(&input)?;
            let q = a.ring().size();
            let w = structure::wedderburn(&a);
            let mut out = String::new();
            if input.format == Format::Text {
                let _ = writeln!(out, "radical: dimension {}", w.radical.dim());
                let _ = writeln!(out, "blocks: {}", w.blocks.len());
                for b in &w.blocks {
                    let _ = writeln!(out, "  {}", kappa_str(b.r, q, b.n));
                }
            } else {
                let _ = writeln!(out, "wedderburn radical_dim={} blocks={}", w.radical.dim(), w.blocks.len());
                for b in &w.blocks {
                    let _ = writeln!(out, "block r={} n={}", b.r, b.n);
                }
            }
            Ok(out)
        }
        Command::Points { input, fiber, fibers_up_to } => {
            let order = load_order(&input)?;
            let fibers = selected_fibers(&order, &fiber, fibers_up_to)?;
            let mut out = String::new();
            for m in &fibers {
                let pts = order.closed_points_over(m).map_err(|e| e.to_string())?;
                for p in pts {
                    let SpecPoint::Closed { base_ideal, point } = p else { unreachable!() };
                    if input.format == Format::Text {
                        let _ = writeln!(
                            out,
                            "point over ({}): kappa = {}, N = {}",
                            base_ideal.describe(&order.base),
                            kappa_of(&order, &base_ideal, &point),
                            point.residue_size
                        );
                    } else {
                        let _ = writeln!(
                            out,
                            "point base={} N={} r={}",
                            base_ideal.describe(&order.base),
                            point.residue_size,
                            point.r
                        );
                    }
                }
            }
            Ok(out)
        }
        Command::Spec { input, localize, generic } => {
            let order = load_order(&input)?;
            let selector = spec_selector(&order, localize, generic)?;
            let poset = order.spec_poset(&selector).map_err(|e| e.to_string())?;
            Ok(render_poset(&order, &poset, input.format))
        }
        Command::Zeta { input, degree } => {
            let order = load_order(&input)?;
            let z = zeta::zeta_series(&order, degree as usize).map_err(|e| e.to_string())?;
            let mut out = String::new();
            let coeffs: Vec<String> = z.coeffs.iter().map(|c| c.to_string()).collect();
            if input.format == Format::Text {
                let _ = writeln!(out, "zeta series to degree {} in u = q^-s:", degree);
                let _ = writeln!(out, "  coefficients: {}", coeffs.join(", "));
                if z.provenance.len() <= 12 {
                    for (fiber, factors) in &z.provenance {
                        let _ = writeln!(out, "  fiber ({}): {}", fiber, factor_list(factors));
                    }
                } else {
                    // census grouped by local factor shape
                    let mut census: std::collections::BTreeMap<String, usize> =
                        std::collections::BTreeMap::new();
                    for (_, factors) in &z.provenance {
                        *census.entry(factor_list(factors)).or_insert(0) += 1;
                    }
                    for (shape, count) in census {
                        let _ = writeln!(out, "  {} fiber(s) with {}", count, shape);
                    }
                }
            } else {
                let _ = writeln!(out, "series D={} coeffs={}", degree, coeffs.join(","));
            }
            Ok(out)
        }
        Command::Dirichlet { input, limit } => {
            let order = load_order(&input)?;
            let d = zeta::dirichlet_prefix(&order, limit as usize).map_err(|e| e.to_string())?;
            let mut out = String::new();
            if input.format == Format::Text {
                let coeffs: Vec<String> = d.coeffs.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(out, "dirichlet coefficients a_1..a_{}:", limit);
                let _ = writeln!(out, "  {}", coeffs.join(", "));
                for (p, factors) in &d.local_factors {
                    let fs: Vec<String> = factors
                        .iter()
                        .map(|f| format!("(1-{}^-{}s)^-{}", p, f.degree, f.multiplicity))
                        .collect();
                    let _ = writeln!(out, "  p = {}: {}", p, fs.join(" "));
                }
            } else {
                for (p, factors) in &d.local_factors {
                    for f in factors {
                        let _ = writeln!(
                            out,
                            "euler p={} factor=(1-{}^-{}s)^-{}",
                            p, p, f.degree, f.multiplicity
                        );
                    }
                }
                let coeffs: Vec<String> = d.coeffs.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(out, "dirichlet N={} coeffs={}", limit, coeffs.join(","));
            }
            Ok(out)
        }
        Command::Tensor { input, with } => {
            let a = load_field_algebra(&input)?;
            let base = input
                .base
                .as_deref()
                .ok_or_else(|| "tensor requires --base GF(p^k)".to_string())?;
            let base_ring = parse_base(base).map_err(|e| e.to_string())?;
            let BaseRing::FiniteField(field) = &base_ring else {
                return Err("tensor factors must live over a finite field base".into());
            };
            let second = presets::preset_description(&with, base_ring.clone())
                .and_then(|d| d.build_fq())
                .map_err(|e| e.to_string())?;
            let ground = presets::field_as_algebra(field.clone());
            let f = procesi::unit_morphism(&ground, &a).map_err(|e| e.to_string())?;
            let g = procesi::unit_morphism(&ground, &second).map_err(|e| e.to_string())?;
            let t = procesi::tensor(&f, &g).map_err(|e| e.to_string())?;
            let mut out = String::new();
            if input.format == Format::Text {
                let _ = writeln!(out, "tensor product: rank {}", t.algebra.dim());
            }
            let ser = descr::serialize_fq(&t.algebra)
                .or_else(|_| descr::serialize_fq(&t.algebra.rebased_with_unit_first()));
            out.push_str(&ser.map_err(|e| e.to_string())?);
            Ok(out)
        }
        Command::CheckMorphism { file, preset, base, format } => {
            let h = match (file, preset) {
                (Some(path), None) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| format!("cannot read {}: {}", path, e))?;
                    procesi::parse_morphism_file(&text).map_err(|e| e.to_string())?
                }
                (None, Some(name)) => morphism_preset(&name, base.as_deref())?,
                _ => return Err("check-morphism needs exactly one of --file or --preset".into()),
            };
            let procesi_ok = procesi::procesi_check(&h);
            let rc_ok = procesi::rc_check(&h);
            let mut out = String::new();
            if format == Format::Text {
                let _ = writeln!(out, "procesi: {}", procesi_ok);
                let _ = writeln!(out, "rc: {}", rc_ok);
            } else {
                let _ = writeln!(out, "morphism procesi={} rc={}", procesi_ok, rc_ok);
            }
            if !procesi_ok {
                for (i, p) in structure::max_two_sided_ideals(h.target()).iter().enumerate() {
                    let demo =
                        procesi::pullback_demonstration(&h, &p.ideal).map_err(|e| e.to_string())?;
                    if format == Format::Text {
                        let _ = writeln!(
                            out,
                            "pullback of maximal ideal {} is {}: quotient has {} block(s), radical dimension {}",
                            i + 1,
                            if demo.prime { "prime" } else { "NOT prime" },
                            demo.quotient_blocks,
                            demo.quotient_radical_dim
                        );
                    } else {
                        let _ = writeln!(
                            out,
                            "demo target_point={} prime={} blocks={} radical_dim={}",
                            i + 1,
                            demo.prime,
                            demo.quotient_blocks,
                            demo.quotient_radical_dim
                        );
                    }
                }
            }
            Ok(out)
        }
        Command::Neighborhood { input, localize, point } => {
            let order = load_order(&input)?;
            let selector = spec_selector(&order, localize, true)?;
            let poset = order.spec_poset(&selector).map_err(|e| e.to_string())?;
            if point == 0 {
                return Err("--point is 1-based".into());
            }
            let nbhd =
                order::smallest_neighborhood(&poset, point - 1).map_err(|e| e.to_string())?;
            let names = point_names(&poset);
            let mut out = String::new();
            let list: Vec<String> = nbhd.iter().map(|&i| names[i].clone()).collect();
            if input.format == Format::Text {
                let _ = writeln!(out, "U({}) = {{{}}}", names[point - 1], list.join(", "));
            } else {
                let _ = writeln!(out, "neighborhood point={} members={}", names[point - 1], list.join(","));
            }
            Ok(out)
        }
    }
}

fn factor_list(factors: &[zeta::EulerFactor]) -> String {
    factors
        .iter()
        .map(|f| format!("(1-u^{})^-{}", f.degree, f.multiplicity))
        .collect::<Vec<_>>()
        .join(" ")
}

fn kappa_str(r: usize, q: u128, n: usize) -> String {
    if n == 1 {
        format!("M_{}(GF({}))", r, q)
    } else {
        format!("M_{}(GF({}^{}))", r, q, n)
    }
}

fn kappa_of(order: &Order, base_ideal: &BaseMaxIdeal, p: &structure::Point) -> String {
    let q = base_ideal.residue_size(&order.base);
    kappa_str(p.r, q, p.center_degree)
}

/// Names for poset points in listing order: closed points `m1, m2, ...`,
/// generic points `g1, g2, ...`.
fn point_names(poset: &order::SpecPoset) -> Vec<String> {
    let mut names = vec![];
    let mut nm = 0;
    let mut ng = 0;
    for p in &poset.points {
        if p.is_closed() {
            nm += 1;
            names.push(format!("m{}", nm));
        } else {
            ng += 1;
            names.push(format!("g{}", ng));
        }
    }
    names
}

fn render_poset(order: &Order, poset: &order::SpecPoset, format: Format) -> String {
    let names = point_names(poset);
    let mut out = String::new();
    for (i, p) in poset.points.iter().enumerate() {
        match p {
            SpecPoint::Closed { base_ideal, point } => {
                if format == Format::Text {
                    let _ = writeln!(
                        out,
                        "{}: closed over ({}), kappa = {}, N = {}",
                        names[i],
                        base_ideal.describe(&order.base),
                        kappa_of(order, base_ideal, point),
                        point.residue_size
                    );
                } else {
                    let _ = writeln!(
                        out,
                        "point base={} N={} r={}",
                        base_ideal.describe(&order.base),
                        point.residue_size,
                        point.r
                    );
                }
            }
            SpecPoint::Generic { cleared_gens, residue_dim, center_degree } => {
                let gens: Vec<String> =
                    cleared_gens.iter().map(|g| fmt_int_vec(order, g)).collect();
                if format == Format::Text {
                    let _ = writeln!(
                        out,
                        "{}: generic, residue dimension {} (center degree {}), ideal = ({})",
                        names[i],
                        residue_dim,
                        center_degree,
                        gens.join(", ")
                    );
                } else {
                    let _ = writeln!(
                        out,
                        "generic dim={} degree={} gens={}",
                        residue_dim,
                        center_degree,
                        gens.join(";")
                    );
                }
            }
        }
    }
    for (i, _) in poset.points.iter().enumerate() {
        let cl = poset.closure_of(i);
        if cl.len() > 1 || format == Format::Text {
            let members: Vec<String> = cl.iter().map(|&j| names[j].clone()).collect();
            if format == Format::Text {
                let _ = writeln!(out, "cl({}) = {{{}}}", names[i], members.join(", "));
            } else {
                let _ = writeln!(out, "closure of={} members={}", names[i], members.join(","));
            }
        }
    }
    out
}

fn fmt_int_vec(order: &Order, v: &[num::BigInt]) -> String {
    use num::Zero;
    let labels = order.labels();
    let mut terms = vec![];
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c == &num::BigInt::from(1) {
            terms.push(labels[i].clone());
        } else if c == &num::BigInt::from(-1) {
            terms.push(format!("-{}", labels[i]));
        } else {
            terms.push(format!("{}*{}", c, labels[i]));
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+").replace("+-", "-")
    }
}

fn load_description(input: &InputArgs) -> Result<descr::AlgebraDescription, String> {
    match (&input.preset, &input.file) {
        (Some(name), None) => {
            let base = input
                .base
                .as_deref()
                .ok_or_else(|| "presets need --base <ring>".to_string())?;
            let base = parse_base(base).map_err(|e| e.to_string())?;
            presets::preset_description(name, base).map_err(|e| e.to_string())
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {}", path, e))?;
            descr::parse(&text).map_err(|e| e.to_string())
        }
        _ => Err("exactly one of --preset or --file is required".into()),
    }
}

fn load_order(input: &InputArgs) -> Result<Order, String> {
    order::make_order(&load_description(input)?).map_err(|e| e.to_string())
}

fn load_field_algebra(
    input: &InputArgs,
) -> Result<ncspec::algebra::ScAlgebra<FiniteField>, String> {
    let order = load_order(input)?;
    match &order.algebra {
        OrderAlgebra::Field(a) => Ok(a.clone()),
        _ => Err("this operation requires a finite field base (try --base GF(p^k))".into()),
    }
}

fn selected_fibers(
    order: &Order,
    fiber: &[String],
    fibers_up_to: Option<u64>,
) -> Result<Vec<BaseMaxIdeal>, String> {
    let mut out = vec![];
    if let Some(bound) = fibers_up_to {
        out.extend(base_max_ideals(&order.base, bound));
    }
    for f in fiber {
        out.push(parse_fiber(order, f)?);
    }
    if out.is_empty() {
        if matches!(order.base, BaseRing::FiniteField(_)) {
            out.push(BaseMaxIdeal::Zero);
        } else {
            return Err("select fibers with --fiber or --fibers-up-to".into());
        }
    }
    Ok(out)
}

fn parse_fiber(order: &Order, s: &str) -> Result<BaseMaxIdeal, String> {
    match &order.base {
        BaseRing::Integers => {
            let p: u64 = s.parse().map_err(|_| format!("bad prime `{}`", s))?;
            Ok(BaseMaxIdeal::Prime(p))
        }
        BaseRing::FiniteField(_) => Ok(BaseMaxIdeal::Zero),
        BaseRing::PolyRing(field) => descr_poly(field, s).map(BaseMaxIdeal::Poly),
    }
}

fn descr_poly(field: &FiniteField, s: &str) -> Result<Vec<ncspec::coeff::FFElem>, String> {
    // reuse the coefficient literal parser: a fiber is a polynomial in T
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let labels = vec!["~".to_string()];
    let with_label = format!("({})*~", compact);
    let terms = descr::parse_combination(&with_label, &labels)?;
    if terms.len() != 1 {
        return Err(format!("cannot read `{}` as a polynomial in T", s));
    }
    let coeffs = match &terms[0].0 {
        descr::CoeffLit::Int(n) => vec![n.clone()],
        descr::CoeffLit::Poly(cs) => cs.clone(),
    };
    let mut out: Vec<ncspec::coeff::FFElem> =
        coeffs.iter().map(|c| ncspec::coeff::base::int_mod_p(c, field)).collect();
    while out.last().is_some_and(|c| field.is_zero(c)) {
        out.pop();
    }
    if out.len() < 2 {
        return Err(format!("`{}` is not a non-constant monic polynomial", s));
    }
    if !field.is_one(out.last().unwrap()) {
        return Err(format!("`{}` is not monic", s));
    }
    Ok(out)
}

fn spec_selector(
    order: &Order,
    localize: Option<u64>,
    generic: bool,
) -> Result<FiberSelector, String> {
    match (&order.base, localize) {
        (BaseRing::Integers, Some(p)) => {
            Ok(FiberSelector { fibers: vec![BaseMaxIdeal::Prime(p)], include_generic: generic })
        }
        (BaseRing::Integers, None) => Err("orders over Z need --localize <p>".into()),
        (BaseRing::FiniteField(_), None) => {
            Ok(FiberSelector { fibers: vec![BaseMaxIdeal::Zero], include_generic: generic })
        }
        _ => Err("spec supports base Z (with --localize) and finite field bases".into()),
    }
}

fn morphism_preset(name: &str, base: Option<&str>) -> Result<procesi::AlgMorphism, String> {
    match name {
        "diag2" => {
            let base = base.ok_or_else(|| "morphism presets need --base GF(p)".to_string())?;
            let BaseRing::FiniteField(f) = parse_base(base).map_err(|e| e.to_string())? else {
                return Err("diag2 needs a finite field base".into());
            };
            let source = presets::product_of_two_fields(f.clone());
            let target = ncspec::algebra::matrix_algebra(&presets::field_as_algebra(f), 2)
                .map_err(|e| e.to_string())?;
            // u -> E11, v -> E22
            let images = vec![target.basis_vec(0), target.basis_vec(3)];
            procesi::make_morphism(&source, &target, &images).map_err(|e| e.to_string())
        }
        other => Err(format!("unknown morphism preset `{}`", other)),
    }
}
