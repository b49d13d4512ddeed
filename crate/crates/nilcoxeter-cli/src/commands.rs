use std::collections::HashMap;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use nilcoxeter::coxeter::{CoxeterDiagram, CoxeterGroup};
use nilcoxeter::extengine::{minimal_resolution, presentation_table, FiniteDimAlgebra};
use nilcoxeter::koszul::{
    nilcactus_relations, perpendicular, x_graded_ranks, z_relation_space, Orientation, Pairing,
};
use nilcoxeter::linalg::{is_prime, Scalars};
use nilcoxeter::nilcox::{loewy_dims, NilCoxElement};
use nilcoxeter::pirep::{image_dimension, rep_recursive, verify_homomorphism};
use nilcoxeter::resolution::{
    check_cubes, check_exactness, check_internal_degree, check_minimality, check_squares, CheckResult,
    Resolution,
};
use nilcoxeter::zring::{binomial, enumerate_canonical, f_decode, f_encode, reversal_steps, ZRing};

use crate::report::{Report, Table, Verdict};
use crate::suite::{self, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "nilcox", version, about = "Computations with nilCoxeter algebras and their Ext rings")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, length distribution and longest element of a Coxeter group.
    Group(GroupArgs),
    /// Dimensions and checks for a nilCoxeter algebra.
    Algebra(AlgebraArgs),
    /// Loewy layer dimensions of the nilCoxeter algebra of S_n.
    Loewy(LoewyArgs),
    /// Canonical forms, the tuple encoding and ranks of the ring Z.
    Zring {
        #[command(subcommand)]
        action: ZringAction,
    },
    /// The explicit resolution of the trivial module in type A.
    Resolve(ResolveArgs),
    /// Ext ranks and products from the generic minimal resolution.
    Ext(ExtArgs),
    /// Matrix representations of Z and their images.
    Pirep(PirepArgs),
    /// Quadratic duality between Z and the signed nilcactus algebra.
    Koszul(KoszulArgs),
    /// Run every acceptance check.
    VerifyAll(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    /// Coxeter type such as A:3, B:2, D:4, I2:5, H:3 or matrix:[[1,3],[3,1]].
    #[arg(long = "type", conflicts_with = "n")]
    pub kind: Option<String>,
    /// Number of letters; selects the symmetric group S_n.
    #[arg(long)]
    pub n: Option<usize>,
}

impl TypeArgs {
    fn diagram(&self) -> Result<CoxeterDiagram, String> {
        match (&self.kind, self.n) {
            (Some(t), _) => CoxeterDiagram::parse(t).map_err(|e| e.to_string()),
            (None, n) => CoxeterDiagram::symmetric(n.unwrap_or(4)).map_err(|e| e.to_string()),
        }
    }
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    #[command(flatten)]
    pub kind: TypeArgs,
    /// Check that psi is an involutive automorphism and lengths are symmetric.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    #[command(flatten)]
    pub kind: TypeArgs,
    /// Prime for the associativity check.
    #[arg(long, default_value_t = 2, value_parser = prime)]
    pub p: u64,
    /// Check associativity and the twisted trace symmetry.
    #[arg(long)]
    pub check: bool,
    /// Seed for sampled associativity triples on large algebras.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct LoewyArgs {
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    /// Compare with length counts of the group.
    #[arg(long)]
    pub check: bool,
}

#[derive(Subcommand, Debug)]
pub enum ZringAction {
    /// Put a monomial such as [1,3][2,3]^2 in canonical and reversed canonical form.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Number of letters; defaults to the largest index in the word.
        #[arg(long)]
        n: Option<usize>,
        /// Work in the signless ring.
        #[arg(long)]
        signless: bool,
    },
    /// The canonical monomial of a tuple such as 2,3,1 (or -2,-3,-1).
    Encode {
        #[arg(allow_hyphen_values = true)]
        tuple: String,
    },
    /// Ranks of Z by degree.
    Ranks {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ResolveCheck {
    All,
    Squares,
    Cubes,
    Minimality,
    InternalDegree,
    Exactness,
}

#[derive(Args, Debug)]
pub struct ResolveArgs {
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value_t = 6)]
    pub max_degree: u32,
    /// Checks to run, comma separated.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub check: Vec<ResolveCheck>,
    /// Sample this many cells for the exactness and anticommutation checks.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct ExtArgs {
    #[command(flatten)]
    pub kind: TypeArgs,
    #[arg(long, default_value_t = 2, value_parser = prime)]
    pub p: u64,
    /// Homological degrees to resolve.
    #[arg(long, default_value_t = 4)]
    pub steps: usize,
    /// List products of basis classes with degrees summing to at most this.
    #[arg(long)]
    pub products: Option<usize>,
    /// Check the resolution and, when a presentation is known, its relations.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug)]
pub struct PirepArgs {
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    /// Prime for the image dimension.
    #[arg(long, default_value_t = 3, value_parser = prime)]
    pub p: u64,
    /// Parameters t_1..t_{n-1}; all 1 by default.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub params: Vec<i64>,
    /// Print the matrix of each generator.
    #[arg(long)]
    pub emit_matrices: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KoszulCheck {
    Duality,
    Ranks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrientationArg {
    Dual,
    Shifted,
}

#[derive(Args, Debug)]
pub struct KoszulArgs {
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    /// A prime, or 0 for the rationals.
    #[arg(long, default_value = "0", value_parser = scalars)]
    pub p: Scalars,
    /// Largest word length for the rank comparison.
    #[arg(long, default_value_t = 4)]
    pub max_degree: usize,
    #[arg(long, value_enum, value_delimiter = ',')]
    pub check: Vec<KoszulCheck>,
    /// Sign rule for reversed generators of X.
    #[arg(long, value_enum, default_value_t = OrientationArg::Dual)]
    pub orientation: OrientationArg,
    /// List the relations of X.
    #[arg(long)]
    pub emit_relations: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Largest number of letters used by any check.
    #[arg(long)]
    pub n: Option<usize>,
    /// Use only this prime where a check sweeps over primes.
    #[arg(long, value_parser = prime)]
    pub p: Option<u64>,
    /// Short profile with at most four letters.
    #[arg(long)]
    pub quick: bool,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Include elapsed times in the output.
    #[arg(long)]
    pub timings: bool,
}

fn prime(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(p) if is_prime(p) => Ok(p),
        _ => Err(format!("{s} is not a prime")),
    }
}

fn scalars(s: &str) -> Result<Scalars, String> {
    Scalars::parse(s).ok_or_else(|| format!("{s} is neither a prime nor 0"))
}

pub fn execute(command: &Command) -> Result<Report, String> {
    match command {
        Command::Group(a) => group(a),
        Command::Algebra(a) => algebra(a),
        Command::Loewy(a) => loewy(a),
        Command::Zring { action } => zring(action),
        Command::Resolve(a) => resolve(a),
        Command::Ext(a) => ext(a),
        Command::Pirep(a) => pirep(a),
        Command::Koszul(a) => koszul(a),
        Command::VerifyAll(a) => verify_all(a),
    }
}

fn from_check(c: CheckResult) -> Verdict {
    let passed = c.passed();
    let detail = c.first_failure.map(|f| format!("{} failures, first: {f}", c.failures));
    Verdict::new(c.name, passed, c.checked, detail)
}

fn joined<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn group(a: &GroupArgs) -> Result<Report, String> {
    let diagram = a.kind.diagram()?;
    let g = CoxeterGroup::new(diagram.clone()).map_err(|e| e.to_string())?;
    let mut r = Report::new("group");
    r.param("type", diagram.to_string());
    let counts = g.length_counts();
    let w0 = g.reduced_word(g.longest_element());
    r.line(format!("type {diagram}, rank {}, order {}, longest element length {}", g.rank(), g.order(), w0.len()));
    r.line(format!("longest element {}", joined(&w0, " ")));
    r.line(format!("psi on generators {}", joined(&g.psi_on_generators(), " ")));
    r.value("rank", g.rank());
    r.value("order", g.order());
    r.value("length_counts", &counts);
    r.value("longest_word", &w0);
    r.value("psi_on_generators", g.psi_on_generators());
    let mut t = Table::new("elements by length", &["length", "count"]);
    for (l, c) in counts.iter().enumerate() {
        t.push(vec![json!(l), json!(c)]);
    }
    r.tables.push(t);
    if a.check {
        let mut checked = 0;
        let mut bad = None;
        for u in (1..=g.rank()).map(|i| g.generator(i)) {
            for v in g.elements() {
                checked += 1;
                let ok = g.psi(g.psi(v)) == v && g.psi(g.mul(u, v)) == g.mul(g.psi(u), g.psi(v));
                if !ok && bad.is_none() {
                    bad = Some(format!("at {:?}", g.reduced_word(v)));
                }
            }
        }
        r.check(Verdict::new("psi is an involutive automorphism", bad.is_none(), checked, bad));
        let rev: Vec<u64> = counts.iter().rev().copied().collect();
        r.check(Verdict::new("length counts are palindromic", rev == counts, 1, None));
    }
    Ok(r)
}

fn algebra(a: &AlgebraArgs) -> Result<Report, String> {
    let diagram = a.kind.diagram()?;
    let g = Arc::new(CoxeterGroup::new(diagram.clone()).map_err(|e| e.to_string())?);
    let alg = FiniteDimAlgebra::from_group(&g, a.p).map_err(|e| e.to_string())?;
    let mut r = Report::new("algebra");
    r.param("type", diagram.to_string());
    r.param("p", a.p);
    let hilbert = alg.hilbert_series();
    r.line(format!("nilCoxeter algebra of {diagram}: dimension {}, top degree {}", alg.dim(), alg.top_degree()));
    r.line(format!("hilbert series {}", joined(&hilbert, " ")));
    r.value("dim", alg.dim());
    r.value("hilbert_series", &hilbert);
    if a.check {
        let exhaustive = alg.dim() <= 120;
        let samples = if exhaustive { None } else { Some((20_000, a.seed)) };
        let checked = if exhaustive { alg.dim().pow(3) } else { 20_000 };
        r.check(Verdict::new("associativity", alg.check_associativity(samples), checked, None));
        if g.order() <= 250 {
            let basis: Vec<NilCoxElement> = g.elements().map(|w| NilCoxElement::basis(&g, w)).collect();
            let mut c = CheckResult::new("trace symmetry Tr(ab) = Tr(b psi(a))");
            suite::trace_symmetry(&basis, "", &mut c);
            r.check(from_check(c));
        }
    }
    Ok(r)
}

fn loewy(a: &LoewyArgs) -> Result<Report, String> {
    if a.n == 0 {
        return Err("--n must be at least 1".into());
    }
    let dims = loewy_dims(a.n);
    let mut r = Report::new("loewy");
    r.param("n", a.n);
    r.line(joined(&dims, " "));
    r.value("dims", &dims);
    if a.check {
        let g = CoxeterGroup::symmetric(a.n).map_err(|e| e.to_string())?;
        let counts = g.length_counts();
        r.check(Verdict::new("layer dimensions equal length counts", counts == dims, dims.len(), None));
    }
    Ok(r)
}

/// Largest index appearing in a monomial written as [i,j]...
fn largest_index(word: &str) -> usize {
    word.split('[')
        .skip(1)
        .filter_map(|s| s.split(']').next())
        .flat_map(|s| s.split(','))
        .filter_map(|x| x.trim().parse().ok())
        .max()
        .unwrap_or(0)
}

fn zring(action: &ZringAction) -> Result<Report, String> {
    match action {
        ZringAction::Normalize { word, n, signless } => {
            let n = n.unwrap_or_else(|| largest_index(word).max(2));
            let ring = if *signless { ZRing::signless(n) } else { ZRing::signed(n) }.map_err(|e| e.to_string())?;
            let e = ring.parse(word).map_err(|e| e.to_string())?;
            let mut r = Report::new("zring normalize");
            r.param("n", n);
            r.param("signless", signless);
            r.param("word", word);
            let Some(m) = e.terms().next() else {
                r.line("canonical 0");
                r.value("canonical", "0");
                return Ok(r);
            };
            r.line(format!("canonical {m}"));
            let steps: Vec<String> = reversal_steps(&ring, &m.factors)
                .into_iter()
                .map(|s| {
                    let t = s.text();
                    if m.sign < 0 {
                        t.strip_prefix('-').map(str::to_string).unwrap_or(format!("-{t}"))
                    } else {
                        t
                    }
                })
                .collect();
            for (k, s) in steps.iter().enumerate() {
                r.line(format!("step {} {s}", k + 1));
            }
            let reversed = steps.last().cloned().unwrap_or_else(|| m.to_string());
            r.line(format!("reversed {reversed}"));
            r.value("canonical", m.to_string());
            r.value("steps", &steps);
            r.value("reversed", reversed);
            r.value("tuple", f_decode(&m, n));
            r.value("degree", m.degree());
            r.value("internal_degree", m.internal_degree());
            Ok(r)
        }
        ZringAction::Encode { tuple } => {
            let raw: Vec<i64> = tuple
                .split(',')
                .map(|s| s.trim().parse::<i64>().map_err(|_| format!("bad tuple entry {s:?}")))
                .collect::<Result<_, _>>()?;
            if raw.iter().any(|&x| x > 0) && raw.iter().any(|&x| x < 0) {
                return Err("tuple entries must all have the same sign".into());
            }
            let t: Vec<u32> = raw.iter().map(|&x| x.unsigned_abs() as u32).collect();
            let m = f_encode(&t).map_err(|e| e.to_string())?;
            let mut r = Report::new("zring encode");
            r.param("tuple", &raw);
            r.line(m.to_string());
            r.value("monomial", m.to_string());
            Ok(r)
        }
        ZringAction::Ranks { n, max_degree } => {
            if *n < 2 {
                return Err("--n must be at least 2".into());
            }
            let mut r = Report::new("zring ranks");
            r.param("n", n);
            r.param("max_degree", max_degree);
            let mut t = Table::new("ranks", &["degree", "rank", "binomial"]);
            let mut ranks = Vec::new();
            let mut ok = true;
            for d in 0..=*max_degree {
                let count = enumerate_canonical(*n, d).len() as u64;
                let b = binomial((d + n - 2) as u64, (n - 2) as u64);
                ok &= count == b;
                ranks.push(count);
                t.push(vec![json!(d), json!(count), json!(b)]);
            }
            r.line(joined(&ranks, " "));
            r.value("ranks", &ranks);
            r.tables.push(t);
            r.check(Verdict::new("enumerated ranks are binomial(d+n-2, n-2)", ok, ranks.len(), None));
            Ok(r)
        }
    }
}

fn resolve(a: &ResolveArgs) -> Result<Report, String> {
    let res = Resolution::new(a.n).map_err(|e| e.to_string())?;
    let mut r = Report::new("resolve");
    r.param("n", a.n);
    r.param("max_degree", a.max_degree);
    let mut t = Table::new("cells", &["degree", "cells"]);
    let mut counts = Vec::new();
    for d in 0..=a.max_degree {
        let c = res.cells(d).len();
        counts.push(c);
        t.push(vec![json!(d), json!(c)]);
    }
    r.line(format!("free ranks {}", joined(&counts, " ")));
    r.value("ranks", &counts);
    r.tables.push(t);
    let all = a.check.contains(&ResolveCheck::All);
    let want = |c| all || a.check.contains(&c);
    let samples = a.samples.map(|s| (s, a.seed));
    let deg = a.max_degree;
    if want(ResolveCheck::Squares) {
        r.check(from_check(check_squares(&res, deg)));
    }
    if want(ResolveCheck::Cubes) {
        r.check(from_check(check_cubes(&res, deg, samples)));
    }
    if want(ResolveCheck::Minimality) {
        r.check(from_check(check_minimality(&res, deg)));
    }
    if want(ResolveCheck::InternalDegree) {
        r.check(from_check(check_internal_degree(&res, deg)));
    }
    if want(ResolveCheck::Exactness) {
        r.check(from_check(check_exactness(&res, deg, samples)));
    }
    Ok(r)
}

fn ext(a: &ExtArgs) -> Result<Report, String> {
    let diagram = a.kind.diagram()?;
    let alg = FiniteDimAlgebra::nilcoxeter(diagram.clone(), a.p, 5_000).map_err(|e| e.to_string())?;
    let res = minimal_resolution(Arc::new(alg), a.steps);
    let mut r = Report::new("ext");
    r.param("type", diagram.to_string());
    r.param("p", a.p);
    r.param("steps", a.steps);
    let ranks = res.ranks();
    r.line(format!("Ext ranks of {diagram} over F{} {}", a.p, joined(&ranks, " ")));
    r.value("ranks", &ranks);
    let mut t = Table::new("ranks by bidegree", &["s", "internal", "rank"]);
    for (s, m) in res.bigraded_ranks().iter().enumerate() {
        for (d, c) in m {
            t.push(vec![json!(s), json!(d), json!(c)]);
        }
    }
    r.tables.push(t);
    if let Some(cap) = a.products {
        let products = res.products(cap).map_err(|e| e.to_string())?;
        let by_pair: HashMap<_, _> = products.iter().map(|x| ((x.left, x.right), &x.product)).collect();
        let mut t = Table::new("products", &["left", "right", "product"]);
        let mut differing = 0;
        for x in &products {
            if by_pair[&(x.right, x.left)] != &x.product {
                differing += 1;
            }
            let terms: Vec<String> = x.product.iter().map(|(k, c)| format!("{c}*e[{},{k}]", x.left.0 + x.right.0)).collect();
            let text = if terms.is_empty() { "0".into() } else { terms.join(" + ") };
            t.push(vec![
                json!(format!("e[{},{}]", x.left.0, x.left.1)),
                json!(format!("e[{},{}]", x.right.0, x.right.1)),
                json!(text),
            ]);
        }
        r.line(format!("{} products, {} not commuting with their swap", products.len(), differing));
        r.value("noncommuting_products", differing);
        r.tables.push(t);
    }
    if a.check {
        r.check(from_check(res.check_composites()));
        r.check(from_check(res.check_minimality()));
        let tag = diagram.to_string();
        if let Ok(pres) = presentation_table(&tag).or_else(|_| presentation_table(&tag.replace(':', ""))) {
            let cap = 2 * pres.generators.iter().map(|g| g.letters.len()).max().unwrap_or(1);
            match pres.check(&res, cap) {
                Ok(rep) => {
                    let detail = (!rep.complete()).then(|| {
                        format!("kernel {} vs relations {}", rep.kernel_dim, rep.relations_rank)
                    });
                    r.check(Verdict::new(
                        format!("presented relations hold up to rescaling ({})", pres.tag),
                        rep.complete(),
                        pres.relations.len(),
                        detail,
                    ));
                }
                Err(e) => r.check(Verdict::new("presented relations", false, 0, Some(e.to_string()))),
            }
        }
    }
    Ok(r)
}

fn pirep(a: &PirepArgs) -> Result<Report, String> {
    if !(2..=12).contains(&a.n) {
        return Err("--n must be between 2 and 12".into());
    }
    let params = if a.params.is_empty() { vec![1; a.n - 1] } else { a.params.clone() };
    let rep = rep_recursive(a.n, &params).map_err(|e| e.to_string())?;
    let size = rep.size();
    let dim = image_dimension(&rep, a.p);
    let mut r = Report::new("pirep");
    r.param("n", a.n);
    r.param("p", a.p);
    r.param("params", &params);
    r.line(format!("representation of size {size}, image dimension {dim} over F{}", a.p));
    for (k, t) in params.iter().enumerate().filter(|(_, &t)| t.rem_euclid(a.p as i64) == 0) {
        r.line(format!("note: t_{} = {t} vanishes mod {}", k + 1, a.p));
    }
    r.value("size", size);
    r.value("image_dimension", dim);
    if a.emit_matrices {
        let mut all = serde_json::Map::new();
        for (&(i, j), m) in rep.images() {
            r.line(format!("z[{i},{j}] ="));
            for row in m.rows() {
                r.line(format!("  {}", joined(&row, " ")));
            }
            all.insert(format!("z[{i},{j}]"), json!(m.rows()));
        }
        r.value("matrices", all);
    }
    let hom = verify_homomorphism(&rep);
    r.check(Verdict::new("defining relations of Z hold", hom.passed(), hom.checked, hom.failures.first().cloned()));
    r.check(Verdict::new("image is the full matrix algebra", dim == size * size, 1, None));
    Ok(r)
}

fn koszul(a: &KoszulArgs) -> Result<Report, String> {
    let orientation = match a.orientation {
        OrientationArg::Dual => Orientation::Dual,
        OrientationArg::Shifted => Orientation::Shifted,
    };
    let z = z_relation_space(a.n).map_err(|e| e.to_string())?;
    let x = nilcactus_relations(a.n, orientation).map_err(|e| e.to_string())?;
    let mut r = Report::new("koszul");
    r.param("n", a.n);
    r.param("scalars", a.p.to_string());
    r.param("orientation", format!("{:?}", a.orientation).to_lowercase());
    r.line(format!(
        "{} generators, {} pairs; Z has {} relations, X has {}",
        z.generators().len(),
        z.pair_count(),
        z.dim(),
        x.dim()
    ));
    r.value("z_relations", z.dim());
    r.value("x_relations", x.dim());
    if a.emit_relations {
        let texts: Vec<String> = (0..x.dim()).map(|k| x.relation_text(k)).collect();
        for t in &texts {
            r.line(format!("  {t} = 0"));
        }
        r.value("x_relation_text", &texts);
    }
    if a.check.contains(&KoszulCheck::Duality) {
        let perp = perpendicular(&z, Pairing::Graded, a.p);
        let ok = perp.same_span(&x, a.p);
        r.check(Verdict::new(format!("perpendicular of Z relations is X relations over {}", a.p), ok, x.dim(), None));
    }
    if a.check.contains(&KoszulCheck::Ranks) {
        let p = match a.p {
            Scalars::Prime(p) => p,
            Scalars::Rational => suite::LARGE_PRIME,
        };
        let ranks = x_graded_ranks(a.n, a.max_degree, orientation, p).map_err(|e| e.to_string())?;
        let mut t = Table::new("X ranks by length", &["length", "normal words", "linear algebra"]);
        for (w, (u, v)) in ranks.by_normal_form.iter().zip(&ranks.by_linear_algebra).enumerate() {
            t.push(vec![json!(w), json!(u), json!(v)]);
        }
        r.tables.push(t);
        r.value("x_ranks", &ranks.by_linear_algebra);
        r.check(Verdict::new(
            format!("X ranks agree between normal words and linear algebra mod {p}"),
            ranks.agree(),
            ranks.by_normal_form.len(),
            None,
        ));
    }
    Ok(r)
}

fn verify_all(a: &VerifyArgs) -> Result<Report, String> {
    let max_n = match (a.n, a.quick) {
        (Some(n), true) => n.min(4),
        (Some(n), false) => n,
        (None, true) => 4,
        (None, false) => usize::MAX,
    };
    if max_n < 3 {
        return Err("--n must be at least 3".into());
    }
    let cfg = SuiteConfig { max_n, prime: a.p, seed: a.seed };
    let mut r = Report::new("verify-all");
    if max_n != usize::MAX {
        r.param("n", max_n);
    }
    r.param("p", a.p);
    r.param("seed", a.seed);
    let mut all = Vec::new();
    for c in suite::criteria() {
        let out = suite::run_criterion(&c, &cfg);
        let status = if out.passed() { "PASS" } else { "FAIL" };
        let mut line = format!("{status} {}", c.name);
        if a.timings {
            line.push_str(&format!(" ({:.2} s, budget {} s)", out.elapsed.as_secs_f64(), c.budget.as_secs()));
        }
        r.line(line);
        let detail = out.failure();
        r.check(Verdict::new(c.name, out.passed(), out.checked(), detail));
        all.push(out.to_json(a.timings));
    }
    r.value("criteria", all);
    Ok(r)
}
