//! Command-line front end: every subcommand maps onto one library surface
//! and prints JSON by default, with DOT or plain tables on request.

use clap::{Parser, Subcommand};

use crate::acceptance;
use crate::arcdiag::{self, ArcDiagram};
use crate::bypass::{apply_bypass, bypass_triangle, enumerate_equators};
use crate::disk::{DividingSet, Sign};
use crate::present;
use crate::quiver::build_quiver;
use crate::resolve::{k0_class, resolve};

#[derive(Parser)]
#[command(
    name = "contact-disk",
    about = "Dividing sets on the marked disk: bypass triangles, twisted complexes and K-theory",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all circle-free matchings on 2n points.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Plain table instead of JSON.
        #[arg(long)]
        table: bool,
    },
    /// Euler number and face tree of a matching.
    Euler {
        #[arg(long)]
        n: usize,
        /// Chords as space-separated pairs, e.g. "2,3 1,4 5,6".
        #[arg(long)]
        pairs: String,
        /// Basepoint sign, "+" or "-".
        #[arg(long, default_value = "+")]
        sign: String,
        /// Emit the face tree in DOT format.
        #[arg(long)]
        dot: bool,
    },
    /// Essential attaching arcs of a matching and their surgeries.
    Bypass {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pairs: String,
        #[arg(long, default_value = "+")]
        sign: String,
    },
    /// Surgery triangles of a matching, one per attaching arc.
    Triangle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pairs: String,
        #[arg(long, default_value = "+")]
        sign: String,
    },
    /// Resolve a matching into a twisted complex over elementary vertices.
    Resolve {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pairs: String,
        #[arg(long, default_value = "+")]
        sign: String,
    },
    /// Hom-dimension table of the disk quiver category.
    Hom {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        table: bool,
    },
    /// The disk quiver.
    Quiver {
        #[arg(long)]
        n: usize,
        /// Emit DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// A built-in arc diagram with its surface invariants.
    Arc {
        /// One of: zigzag, sphere, genus.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        g: Option<usize>,
        /// Emit the diagram in the plain-text exchange format.
        #[arg(long)]
        text: bool,
    },
    /// Quiver presentation of the algebra of a built-in family.
    Present {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        g: Option<usize>,
        #[arg(long)]
        dot: bool,
        /// Also compute hom dimensions up to this path length.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Grothendieck-group dimensions.
    K0 {
        #[arg(long)]
        family: String,
        #[arg(long)]
        g: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run the acceptance suite and print one line per criterion.
    Selftest {
        /// Seed for sampled checks.
        #[arg(long, default_value_t = 17)]
        seed: u64,
    },
}

/// Parses "a,b c,d ..." into 1-based chord pairs.
pub fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>, String> {
    let mut out = Vec::new();
    for tok in s.split_whitespace() {
        let (a, b) = tok
            .split_once(',')
            .ok_or_else(|| format!("bad pair {tok:?}, expected a,b"))?;
        let a: usize = a.trim().parse().map_err(|_| format!("bad number {a:?}"))?;
        let b: usize = b.trim().parse().map_err(|_| format!("bad number {b:?}"))?;
        out.push((a, b));
    }
    if out.is_empty() {
        return Err("no pairs given".into());
    }
    Ok(out)
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+" => Ok(Sign::Plus),
        "-" => Ok(Sign::Minus),
        other => Err(format!("bad sign {other:?}, expected + or -")),
    }
}

fn matching(n: usize, pairs: &str, sign: &str) -> Result<DividingSet, String> {
    let pairs = parse_pairs(pairs)?;
    let sign = parse_sign(sign)?;
    DividingSet::from_pairs(n, &pairs, sign).map_err(|e| e.to_string())
}

fn family_diagram(
    family: &str,
    n: Option<usize>,
    g: Option<usize>,
) -> Result<ArcDiagram, String> {
    match family {
        "zigzag" => {
            let n = n.ok_or("zigzag needs --n")?;
            arcdiag::zigzag(n).map_err(|e| e.to_string())
        }
        "sphere" => {
            let n = n.ok_or("sphere needs --n")?;
            arcdiag::punctured_sphere(n).map_err(|e| e.to_string())
        }
        "genus" => {
            let g = g.ok_or("genus needs --g")?;
            arcdiag::genus_surface(g).map_err(|e| e.to_string())
        }
        other => Err(format!("unknown family {other:?}")),
    }
}

/// Runs the tool; returns the process exit code (0 success, 1 domain error).
pub fn run(cli: Cli) -> i32 {
    match execute(cli) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn execute(cli: Cli) -> Result<String, String> {
    match cli.command {
        Command::Enumerate { n, table } => {
            if n == 0 || n > 10 {
                return Err("supported range is 1 <= n <= 10".into());
            }
            let all = DividingSet::enumerate(n);
            if table {
                let mut s = String::new();
                for d in &all {
                    s.push_str(&format!("{:?}\n", d.pairs()));
                }
                s.push_str(&format!("{} matchings\n", all.len()));
                Ok(s)
            } else {
                let items: Vec<serde_json::Value> =
                    all.iter().map(DividingSet::to_json).collect();
                Ok(format!(
                    "{}\n",
                    serde_json::json!({"n": n, "count": items.len(), "matchings": items})
                ))
            }
        }
        Command::Euler { n, pairs, sign, dot } => {
            let d = matching(n, &pairs, &sign)?;
            let tree = d.faces().map_err(|e| e.to_string())?;
            if dot {
                return Ok(tree.to_dot());
            }
            let e = d.euler_number().map_err(|e| e.to_string())?;
            Ok(format!(
                "{}\n",
                serde_json::json!({
                    "matching": d.to_json(),
                    "euler": e,
                    "faces": tree.face_count(),
                })
            ))
        }
        Command::Bypass { n, pairs, sign } => {
            let d = matching(n, &pairs, &sign)?;
            let eqs = enumerate_equators(&d).map_err(|e| e.to_string())?;
            let rows: Vec<serde_json::Value> = eqs
                .iter()
                .map(|e| {
                    let out = apply_bypass(&d, e).expect("enumerated arcs are valid");
                    serde_json::json!({
                        "equator": e.to_json(),
                        "result": out.to_json(),
                    })
                })
                .collect();
            Ok(format!(
                "{}\n",
                serde_json::json!({"matching": d.to_json(), "bypasses": rows})
            ))
        }
        Command::Triangle { n, pairs, sign } => {
            let d = matching(n, &pairs, &sign)?;
            let eqs = enumerate_equators(&d).map_err(|e| e.to_string())?;
            let rows: Vec<serde_json::Value> = eqs
                .iter()
                .map(|e| {
                    let t = bypass_triangle(&d, e).expect("enumerated arcs are valid");
                    serde_json::json!({
                        "equator": e.to_json(),
                        "gamma0": t.gamma0.to_json(),
                        "gamma1": t.gamma1.to_json(),
                        "gamma2": t.gamma2.to_json(),
                    })
                })
                .collect();
            Ok(format!(
                "{}\n",
                serde_json::json!({"matching": d.to_json(), "triangles": rows})
            ))
        }
        Command::Resolve { n, pairs, sign } => {
            let d = matching(n, &pairs, &sign)?;
            let r = resolve(&d).map_err(|e| e.to_string())?;
            let class: Vec<Vec<usize>> = k0_class(&r)
                .iter_ones()
                .map(|mask| {
                    (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect()
                })
                .collect();
            Ok(format!(
                "{}\n",
                serde_json::json!({
                    "objects": r.complex.to_json()["objects"],
                    "p": r.complex.to_json()["p"],
                    "log": crate::resolve::resolution_to_json(&r)["log"],
                    "k0": class,
                })
            ))
        }
        Command::Hom { n, table } => {
            if !(2..=12).contains(&n) {
                return Err("supported range is 2 <= n <= 12".into());
            }
            let q = build_quiver(n);
            if table {
                let mut s = String::new();
                for &a in &q.vertices {
                    for &b in &q.vertices {
                        if crate::quiver::hom_dim(a, b) == 1 {
                            s.push_str(&format!("{a:?} -> {b:?}\n"));
                        }
                    }
                }
                return Ok(s);
            }
            let rows: Vec<serde_json::Value> = q
                .vertices
                .iter()
                .flat_map(|&a| {
                    q.vertices.iter().filter_map(move |&b| {
                        (crate::quiver::hom_dim(a, b) == 1).then(|| {
                            serde_json::json!({
                                "src": a.subset(),
                                "tgt": b.subset(),
                            })
                        })
                    })
                })
                .collect();
            Ok(format!(
                "{}\n",
                serde_json::json!({"n": n, "nonzero_homs": rows})
            ))
        }
        Command::Quiver { n, dot } => {
            if !(2..=12).contains(&n) {
                return Err("supported range is 2 <= n <= 12".into());
            }
            let q = build_quiver(n);
            if dot {
                Ok(q.to_dot())
            } else {
                Ok(format!("{}\n", q.to_json()))
            }
        }
        Command::Arc { family, n, g, text } => {
            let z = family_diagram(&family, n, g)?;
            if text {
                return Ok(z.to_text());
            }
            let inv = z.surface_invariants();
            Ok(format!(
                "{}\n",
                serde_json::json!({
                    "segments": z.segment_count(),
                    "handles": z.handle_count(),
                    "euler_char": inv.euler_char,
                    "boundary_components": inv.boundary_components,
                    "genus": inv.genus,
                    "marked_points": inv.marked_points,
                })
            ))
        }
        Command::Present {
            family,
            n,
            g,
            dot,
            cap,
        } => {
            let z = family_diagram(&family, n, g)?;
            let p = arcdiag::presentation(&z).map_err(|e| e.to_string())?;
            if dot {
                return Ok(p.to_dot());
            }
            let mut out = p.to_json();
            if let Some(cap) = cap {
                let c = present::from_quiver_presentation(&p);
                let dims = c.hom_dims(cap).map_err(|e| e.to_string())?;
                out["dims"] = dims.to_json();
            }
            Ok(format!("{out}\n"))
        }
        Command::K0 { family, g, n } => match family.as_str() {
            "genus" => {
                let g = g.ok_or("k0 --family genus needs --g")?;
                if !(1..=10).contains(&g) {
                    return Err("supported range is 1 <= g <= 10".into());
                }
                let k = present::k0_genus(g);
                let graded: Vec<usize> = k
                    .graded_dims()
                    .into_iter()
                    .rev()
                    .map(|(_, d)| d)
                    .collect();
                Ok(format!(
                    "{}\n",
                    serde_json::json!({"dim": k.dim(), "graded": graded})
                ))
            }
            "disk" => {
                let n = n.ok_or("k0 --family disk needs --n")?;
                if !(2..=5).contains(&n) {
                    return Err("supported range is 2 <= n <= 5".into());
                }
                // Vertices modulo the triangle relations accumulated from
                // every surgery triangle; the relations are all trivial mod
                // two, so the dimension is the vertex count.
                let mut relations = Vec::new();
                for d in DividingSet::enumerate(n) {
                    let rd = resolve(&d).map_err(|e| e.to_string())?;
                    for e in enumerate_equators(&d).map_err(|e| e.to_string())? {
                        let t = bypass_triangle(&d, &e).expect("valid");
                        let mut v = k0_class(&rd);
                        for child in [&t.gamma1, &t.gamma2] {
                            let rc = resolve(child).map_err(|e| e.to_string())?;
                            v.xor_assign(&k0_class(&rc));
                        }
                        relations.push(v);
                    }
                }
                let k = present::K0Presentation::new(
                    vec![0; 1 << (n - 1)],
                    relations,
                );
                Ok(format!(
                    "{}\n",
                    serde_json::json!({"dim": k.dim(), "generators": 1 << (n - 1)})
                ))
            }
            other => Err(format!("k0 supports families genus and disk, not {other:?}")),
        },
        Command::Selftest { seed } => {
            let reports = acceptance::run_all(seed);
            let text = acceptance::render_report(&reports);
            if reports.iter().all(|r| r.passed) {
                Ok(text)
            } else {
                // Print the report and fail.
                print!("{text}");
                Err("selftest failed".into())
            }
        }
    }
}
