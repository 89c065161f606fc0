use std::collections::BTreeMap;
use std::fmt::Display;

use adams_core::extension_lab::{self as lab, ExtensionModel};
use adams_core::psi_lambda_rings::{
    is_special, lambda_structure, FreePsiRing, PsiRing, RingError, SphereElem, SphereKRing, Specialness,
};
use adams_core::sphere_extalg as ext;
use adams_core::symmetric_kernel::{universal_p, universal_pij, NewtonError, UniversalConfig};
use adams_core::{Integers, MultiPoly};
use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::{Cli, Command, ExtalgKind, HopfKind, LabKind, ModelArgs, NewtonKind, PolyKind, RingKind};

pub struct Output {
    pub text: String,
    pub status: u8,
}

struct Printer {
    json: bool,
}

impl Printer {
    fn emit<T: Serialize + ?Sized>(&self, text: impl Display, value: &T) -> Result<Output> {
        self.emit_status(text, value, 0)
    }

    fn emit_status<T: Serialize + ?Sized>(&self, text: impl Display, value: &T, status: u8) -> Result<Output> {
        let text = if self.json { serde_json::to_string(value)? } else { text.to_string() };
        let text = if text.ends_with('\n') { text } else { text + "\n" };
        Ok(Output { text, status })
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let out = Printer { json: cli.json };
    match &cli.command {
        Command::Extalg { kind } => {
            let d = match kind {
                ExtalgKind::Psi(d) => ext::extalg_psi(d.n, d.nprime)?,
                ExtalgKind::Lambda(d) => ext::extalg_lambda(d.n, d.nprime)?,
            };
            out.emit(&d, &d)
        }
        Command::Gn { n, nprime, brute, lmax } => {
            if *brute {
                let g = ext::big_g_bruteforce(*n, *nprime, *lmax)?;
                let v = json!({ "n": n, "n_prime": nprime, "l_max": lmax, "value": num(&g) });
                out.emit(format!("G_{{{n},{nprime}}} = {g} (gcd over l <= {lmax})"), &v)
            } else {
                let g = ext::big_g(*n, *nprime)?;
                let text = if g.per_prime {
                    format!("G_{{{n},{nprime}}}: n = n', every l^n - l^n' vanishes")
                } else {
                    let f: Vec<String> = g.factorization.iter().map(|(p, e)| format!("{p}^{e}")).collect();
                    let f = if f.is_empty() { "1".to_string() } else { f.join(" * ") };
                    format!("G_{{{n},{nprime}}} = {} = {f}", g.value)
                };
                out.emit(text, &g)
            }
        }
        Command::Gpj { p, j, brute, window } => {
            let g = if *brute { ext::gpj_bruteforce(*p, *j, *window)? } else { ext::gpj_closed(*p, *j)? };
            out.emit(format!("g^{p}_{j} = {}", g.value), &g)
        }
        Command::Stable { kmax } => {
            let rows = ext::stable_table(*kmax)?;
            out.emit(ext::format_stable_table(&rows), &rows)
        }
        Command::Hopf { kind } => match kind {
            HopfKind::Feasible(d) => {
                let r = ext::odd_hopf_feasible(d.n, d.nprime)?;
                out.emit(&r, &r)
            }
            HopfKind::Adams { a, nmax } => {
                let ns = ext::adams_scan(*a, *nmax)?;
                let text: Vec<String> = ns.iter().map(u32::to_string).collect();
                out.emit(text.join(" "), &json!({ "a": a, "n_max": nmax, "n": ns }))
            }
        },
        Command::Poly { kind } => match kind {
            PolyKind::UniversalP { i, max_weight } => {
                if *i == 0 {
                    bail!("--i must be at least 1");
                }
                let p = universal_p(*i, &UniversalConfig { max_weight: *max_weight })?;
                out.emit(&p, &json!({ "i": i, "poly": p.to_string() }))
            }
            PolyKind::UniversalPij { i, j, max_weight } => {
                if *i == 0 || *j == 0 {
                    bail!("--i and --j must be at least 1");
                }
                let p = universal_pij(*i, *j, &UniversalConfig { max_weight: *max_weight })?;
                out.emit(&p, &json!({ "i": i, "j": j, "poly": p.to_string() }))
            }
        },
        Command::Ring { kind } => match kind {
            RingKind::ApplyPsi { k, expr } => {
                if *k == 0 {
                    bail!("--k must be at least 1");
                }
                let p: MultiPoly = expr.parse().with_context(|| format!("cannot parse {expr:?}"))?;
                let ring = FreePsiRing::new(p.families());
                let q = ring.psi(*k, &p)?;
                out.emit(&q, &json!({ "k": k, "input": p.to_string(), "result": q.to_string() }))
            }
            RingKind::CheckSpecial { ring, primes } => check_special(&out, ring, primes),
        },
        Command::Newton { kind } => match kind {
            NewtonKind::LambdaFromPsi { i, ring, elem } => lambda_from_psi(&out, *i, ring, elem),
        },
        Command::Lab { kind } => match kind {
            LabKind::Verify(args) => {
                let model = build_model(args)?;
                let report = lab::verify_all(&model, args.kmax)?;
                let status = if report.all_ok() { 0 } else { 2 };
                out.emit_status(&report, &report, status)
            }
            LabKind::Enumerate { n, nprime, h, kmax, special } => {
                let hs = parse_h_values(h)?;
                let classes = lab::enumerate_classes(*n, *nprime, &hs, *kmax, *special)?;
                let lines: Vec<String> = classes.iter().map(|c| c.to_string()).collect();
                let v = json!({
                    "n": n,
                    "n_prime": nprime,
                    "k_max": kmax,
                    "special_only": special,
                    "classes": classes,
                });
                let text = if lines.is_empty() { "no classes".to_string() } else { lines.join("\n") };
                out.emit(text, &v)
            }
        },
    }
}

fn num(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse().expect("integer is a JSON number"))
}

enum RingSpec {
    Z,
    Free,
    Sphere(u32),
}

fn parse_ring(s: &str) -> Result<RingSpec> {
    match s {
        "z" | "Z" => Ok(RingSpec::Z),
        "free" => Ok(RingSpec::Free),
        _ => {
            let n = s
                .strip_prefix("sphere:")
                .ok_or_else(|| anyhow!("unknown ring {s:?}; expected z, free or sphere:N"))?;
            let n: u32 = n.parse().with_context(|| format!("bad sphere dimension {n:?}"))?;
            if n == 0 {
                bail!("sphere dimension must be at least 1");
            }
            Ok(RingSpec::Sphere(n))
        }
    }
}

fn specialness_output<E: Display>(out: &Printer, ring: &str, r: Specialness<E>) -> Result<Output> {
    match r {
        Specialness::Special => out.emit("special", &json!({ "ring": ring, "status": "special" })),
        Specialness::Witness { prime, element, defect } => {
            let text = format!("not special at p = {prime}: Ψ^{prime}({element}) - ({element})^{prime} = {defect}");
            let v = json!({
                "ring": ring,
                "status": "witness",
                "prime": prime,
                "element": element.to_string(),
                "defect": defect.to_string(),
            });
            out.emit_status(text, &v, 2)
        }
    }
}

fn check_special(out: &Printer, ring: &str, primes: &[u64]) -> Result<Output> {
    match parse_ring(ring)? {
        RingSpec::Z => specialness_output(out, ring, is_special(&Integers, primes, &[])?),
        RingSpec::Free => specialness_output(out, ring, is_special(&FreePsiRing::new(['a']), primes, &[])?),
        RingSpec::Sphere(n) => specialness_output(out, ring, is_special(&SphereKRing::new(n), primes, &[])?),
    }
}

fn parse_sphere_elem(s: &str) -> Result<SphereElem> {
    let (u, b) = s.split_once(',').ok_or_else(|| anyhow!("sphere elements are written u,b for u + b·y"))?;
    let u: BigInt = u.trim().parse().with_context(|| format!("bad coefficient {u:?}"))?;
    let b: BigInt = b.trim().parse().with_context(|| format!("bad coefficient {b:?}"))?;
    Ok(SphereElem::new(u, b))
}

fn lambda_output<E: Display>(out: &Printer, i: usize, elem: &str, r: Result<E, RingError>) -> Result<Output> {
    match r {
        Ok(v) => out.emit(
            format!("λ^{i}({elem}) = {v}"),
            &json!({ "i": i, "elem": elem, "status": "ok", "value": v.to_string() }),
        ),
        Err(RingError::Newton(NewtonError::NonIntegralDivision { step, numerator })) => {
            let text = format!("λ^{i}({elem}) is not integral: at step {step} the numerator {numerator} is not divisible by {step}");
            let v = json!({
                "i": i,
                "elem": elem,
                "status": "non_integral_division",
                "step": step,
                "numerator": numerator,
            });
            out.emit_status(text, &v, 2)
        }
        Err(e) => Err(e.into()),
    }
}

fn lambda_from_psi(out: &Printer, i: usize, ring: &str, elem: &str) -> Result<Output> {
    if i == 0 {
        bail!("--i must be at least 1");
    }
    match parse_ring(ring)? {
        RingSpec::Z => {
            let x: BigInt = elem.trim().parse().with_context(|| format!("bad integer {elem:?}"))?;
            lambda_output(out, i, elem, lambda_structure(&Integers, &x, i))
        }
        RingSpec::Sphere(n) => {
            let x = parse_sphere_elem(elem)?;
            let shown = x.to_string();
            lambda_output(out, i, &shown, lambda_structure(&SphereKRing::new(n), &x, i))
        }
        RingSpec::Free => {
            let x: MultiPoly = elem.parse().with_context(|| format!("cannot parse {elem:?}"))?;
            let r = FreePsiRing::new(x.families());
            let shown = x.to_string();
            lambda_output(out, i, &shown, lambda_structure(&r, &x, i))
        }
    }
}

fn parse_nu_list(s: &str) -> Result<BTreeMap<u64, BigInt>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (k, v) = t.split_once(':').ok_or_else(|| anyhow!("expected k:value, got {t:?}"))?;
            let k: u64 = k.trim().parse().with_context(|| format!("bad index {k:?}"))?;
            let v: BigInt = v.trim().parse().with_context(|| format!("bad value {v:?}"))?;
            Ok((k, v))
        })
        .collect()
}

fn build_model(args: &ModelArgs) -> Result<ExtensionModel> {
    let mut nu = match &args.nu2 {
        Some(nu2) if args.n != args.nprime => {
            ExtensionModel::from_nu2(args.n, args.nprime, args.h.clone(), nu2, args.kmax)?.nu
        }
        Some(nu2) => BTreeMap::from([(2, nu2.clone())]),
        None => BTreeMap::new(),
    };
    if let Some(list) = &args.nu {
        nu.extend(parse_nu_list(list)?);
    }
    if nu.is_empty() {
        bail!("give --nu2 or --nu");
    }
    Ok(ExtensionModel::new(args.n, args.nprime, args.h.clone(), nu)?)
}

fn parse_h_values(s: &str) -> Result<Vec<BigInt>> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let a: i64 = a.trim().parse().with_context(|| format!("bad range start {a:?}"))?;
        let end: i64 = b.trim().parse().with_context(|| format!("bad range end {b:?}"))?;
        return Ok((a..=end).map(BigInt::from).collect());
    }
    s.split(',').filter(|t| !t.trim().is_empty()).map(|t| t.trim().parse::<BigInt>().with_context(|| format!("bad value {t:?}"))).collect()
}
