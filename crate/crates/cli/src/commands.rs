//! The subcommands. Each returns rendered output and whether every check
//! that is expected to hold did hold.

use rayon::prelude::*;

use rasa_core::bounds::{
    check_sweep, compare_bounds, exact_grid, float_grid, in_domain_bounds, Abscissa,
    BoundCheckReport, BoundId, Mode,
};
use rasa_core::rasa::certify_convexity;
use rasa_core::scalar::{format_rational, Scalar};
use rasa_core::specfun::{
    default_width, eval_with_derivative, ratio_u, zeros, RatioMethod, UltraParams,
};
use rasa_core::Rational;

use crate::args::{exact_width, validate_lambda, Degrees, Number};
use crate::table::{Cell, Format, Table};
use crate::CliError;

/// Extra abscissae added to every floating-point grid.
pub const FLOAT_GRID_EXTRA: [f64; 2] = [1e3, 1e6];

pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn cell<S: Scalar>(v: &S) -> Cell {
    if S::EXACT {
        Cell::Text(v.to_string())
    } else {
        Cell::Float(v.to_f64())
    }
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Exact => "exact",
        Mode::Float => "float",
    }
}

/// Picks the arithmetic mode: an explicit request wins, otherwise exact when
/// every input is rational and `prefer_exact` is set.
pub fn resolve_mode(
    requested: Option<Mode>,
    all_exact: bool,
    prefer_exact: bool,
) -> Result<Mode, CliError> {
    match requested {
        Some(Mode::Exact) if !all_exact => Err(CliError::Usage(
            "exact mode needs rational inputs; write them as p/q or as integers".into(),
        )),
        Some(m) => Ok(m),
        None if all_exact && prefer_exact => Ok(Mode::Exact),
        None => Ok(Mode::Float),
    }
}

fn lambdas_checked(ls: &[Number]) -> Result<(), CliError> {
    ls.iter()
        .try_for_each(|l| validate_lambda(l).map_err(CliError::Usage))
}

fn require_positive(n: &Degrees) -> Result<(), CliError> {
    if n.lo == 0 {
        return Err(CliError::Usage("degree must be at least 1".into()));
    }
    Ok(())
}

pub fn eval(
    n: &Degrees,
    lambda: &Number,
    xs: &[Number],
    mode: Option<Mode>,
    format: Format,
) -> Result<Outcome, CliError> {
    require_positive(n)?;
    lambdas_checked(std::slice::from_ref(lambda))?;
    if xs.is_empty() {
        return Err(CliError::Usage("at least one --x value is required".into()));
    }
    if let Some(x) = xs.iter().find(|x| !(x.to_f64() >= 1.0)) {
        return Err(CliError::Usage(format!(
            "abscissa must satisfy x >= 1, got {x}"
        )));
    }
    let all_exact = lambda.exact().is_some() && xs.iter().all(|x| x.exact().is_some());
    let mode = resolve_mode(mode, all_exact, false)?;
    let mut table = Table::new([
        "n",
        "lambda",
        "x",
        "p_n",
        "dp_n",
        "u_direct",
        "u_ratio_recursion",
        "u_zero_sum",
    ]);
    for deg in n.range() {
        for x in xs {
            let zero_sum = {
                let p = UltraParams::new(deg, lambda.to_f64())?;
                ratio_u(&p, &x.to_f64(), RatioMethod::ZeroSum)?.u
            };
            let mut row = vec![
                Cell::from(deg),
                lambda.to_string().into(),
                x.to_string().into(),
            ];
            match mode {
                Mode::Exact => {
                    let p = UltraParams::new(deg, lambda.exact().unwrap().clone())?;
                    row.extend(eval_cells(&p, x.exact().unwrap())?);
                }
                Mode::Float => {
                    let p = UltraParams::new(deg, lambda.to_f64())?;
                    row.extend(eval_cells(&p, &x.to_f64())?);
                }
            }
            row.push(zero_sum.into());
            table.push(row);
        }
    }
    Ok(Outcome {
        text: table.render(format),
        ok: true,
    })
}

fn eval_cells<S: Scalar>(p: &UltraParams<S>, x: &S) -> Result<Vec<Cell>, CliError> {
    let pair = eval_with_derivative(p, x);
    let scale = S::from_int(2).powi(pair.scale_exponent);
    let direct = ratio_u(p, x, RatioMethod::Direct).map(|s| s.u).ok();
    let recursion = ratio_u(p, x, RatioMethod::RatioRecursion)?.u;
    Ok(vec![
        cell(&(pair.value.clone() * scale.clone())),
        cell(&(pair.derivative.clone() * scale)),
        direct.as_ref().map_or(Cell::Missing, cell),
        cell(&recursion),
    ])
}

pub struct BoundsArgs<'a> {
    pub specs: &'a [BoundId],
    pub n: &'a Degrees,
    pub lambdas: &'a [Number],
    pub mode: Option<Mode>,
    pub m: usize,
    pub extra_x: &'a [f64],
}

/// Grid points per parallel task.
const CHUNK: usize = 8;

fn sweep<S: Scalar>(
    specs: &[BoundId],
    lambdas: &[S],
    n: &Degrees,
    grid: &[Abscissa<S>],
) -> Result<Vec<BoundCheckReport<S>>, CliError> {
    let ids_for = |l: &S| -> Vec<BoundId> {
        if specs.is_empty() {
            in_domain_bounds(1, l)
        } else {
            specs.to_vec()
        }
    };
    let tasks: Vec<(usize, &[Abscissa<S>])> = (0..lambdas.len())
        .flat_map(|i| grid.chunks(CHUNK).map(move |c| (i, c)))
        .collect();
    let parts: Vec<Vec<BoundCheckReport<S>>> = tasks
        .par_iter()
        .map(|(i, chunk)| check_sweep(&ids_for(&lambdas[*i]), &lambdas[*i], n.range(), chunk))
        .collect::<Result<_, _>>()?;
    // Tasks are ordered by λ, then by chunk; stitch chunks back together.
    let per_lambda = grid.len().div_ceil(CHUNK).max(1);
    let mut out = Vec::new();
    for group in parts.chunks(per_lambda) {
        let mut merged = group[0].clone();
        for part in &group[1..] {
            for (m, r) in merged.iter_mut().zip(part) {
                m.points.extend(r.points.iter().cloned());
            }
        }
        out.extend(merged);
    }
    Ok(out)
}

fn report_rows<S: Scalar>(reports: &[BoundCheckReport<S>], table: &mut Table) -> bool {
    let mut ok = true;
    for r in reports {
        let passed = r.passed();
        ok &= passed || !r.in_domain;
        let worst = r.worst_margin();
        // every grid starts at t = 0, i.e. x = 1
        let at_one = r.points.first().and_then(|p| p.bound.clone());
        table.push(vec![
            r.bound.name().into(),
            r.n.into(),
            r.lambda.to_string().into(),
            mode_name(r.mode).into(),
            r.in_domain.into(),
            r.points.len().into(),
            r.failures().into(),
            if passed { "PASS" } else { "FAIL" }.into(),
            at_one.as_ref().map_or(Cell::Missing, cell),
            worst.as_ref().map(Scalar::to_f64).into(),
            worst.as_ref().map_or(Cell::Missing, cell),
        ]);
    }
    ok
}

pub fn bounds(a: &BoundsArgs, format: Format) -> Result<Outcome, CliError> {
    require_positive(a.n)?;
    lambdas_checked(a.lambdas)?;
    if a.m == 0 {
        return Err(CliError::Usage(
            "grid density --m must be at least 1".into(),
        ));
    }
    if a.lambdas.is_empty() {
        return Err(CliError::Usage(
            "at least one --lambda value is required".into(),
        ));
    }
    let all_exact = a.lambdas.iter().all(|l| l.exact().is_some());
    let mode = resolve_mode(a.mode, all_exact, true)?;
    let mut table = Table::new([
        "bound",
        "n",
        "lambda",
        "mode",
        "in_domain",
        "points",
        "failures",
        "verdict",
        "bound_at_1",
        "worst_margin_f64",
        "worst_margin",
    ]);
    let ok = match mode {
        Mode::Exact => {
            if !a.extra_x.is_empty() {
                return Err(CliError::Usage(
                    "--extra-x needs float mode: exact grids come from rational t only".into(),
                ));
            }
            let ls: Vec<Rational> = a
                .lambdas
                .iter()
                .map(|l| l.exact().unwrap().clone())
                .collect();
            let reports = sweep(a.specs, &ls, a.n, &exact_grid(a.m))?;
            report_rows(&reports, &mut table)
        }
        Mode::Float => {
            let extra: Vec<f64> = FLOAT_GRID_EXTRA.iter().chain(a.extra_x).copied().collect();
            let grid = float_grid(a.m, &extra).map_err(|e| CliError::Usage(e.to_string()))?;
            let ls: Vec<f64> = a.lambdas.iter().map(Number::to_f64).collect();
            let reports = sweep(a.specs, &ls, a.n, &grid)?;
            report_rows(&reports, &mut table)
        }
    };
    Ok(Outcome {
        text: table.render(format),
        ok,
    })
}

pub fn certify(n: &Degrees, format: Format) -> Result<Outcome, CliError> {
    require_positive(n)?;
    let certs = n
        .range()
        .into_par_iter()
        .map(certify_convexity)
        .collect::<Result<Vec<_>, _>>()?;
    let ok = certs.iter().all(|c| c.is_certified());
    let text = if format == Format::Json {
        certs
            .iter()
            .map(|c| serde_json::to_string(&c.record()).expect("records serialize") + "\n")
            .collect()
    } else {
        let mut table = Table::new([
            "n",
            "degree",
            "f2_coeffs",
            "roots_in_open_unit",
            "f2_at_0",
            "f2_at_half",
            "verdict",
        ]);
        for c in &certs {
            let coeffs: Vec<String> = c
                .second_derivative
                .coeffs()
                .iter()
                .map(format_rational)
                .collect();
            table.push(vec![
                c.n.into(),
                c.second_derivative.degree().into(),
                format!("[{}]", coeffs.join(" ")).into(),
                c.roots_in_open_unit.into(),
                format_rational(&c.at_zero).into(),
                format_rational(&c.at_half).into(),
                c.verdict.as_str().into(),
            ]);
        }
        table.render(format)
    };
    Ok(Outcome { text, ok })
}

pub fn export(
    n: &Degrees,
    lambda: &Number,
    mode: Option<Mode>,
    m: usize,
    extra_x: &[f64],
    format: Format,
) -> Result<Outcome, CliError> {
    require_positive(n)?;
    let n = n
        .single()
        .ok_or_else(|| CliError::Usage("export takes a single degree".into()))?;
    lambdas_checked(std::slice::from_ref(lambda))?;
    if m == 0 {
        return Err(CliError::Usage(
            "grid density --m must be at least 1".into(),
        ));
    }
    let mode = resolve_mode(mode, lambda.exact().is_some() && extra_x.is_empty(), true)?;
    let text = match mode {
        Mode::Exact => {
            if !extra_x.is_empty() {
                return Err(CliError::Usage("--extra-x needs float mode".into()));
            }
            let p = UltraParams::new(n, lambda.exact().unwrap().clone())?;
            comparison_table(&p, &exact_grid(m))?.render(format)
        }
        Mode::Float => {
            let p = UltraParams::new(n, lambda.to_f64())?;
            let grid = float_grid(m, extra_x).map_err(|e| CliError::Usage(e.to_string()))?;
            comparison_table(&p, &grid)?.render(format)
        }
    };
    Ok(Outcome { text, ok: true })
}

fn comparison_table<S: Scalar>(
    p: &UltraParams<S>,
    grid: &[Abscissa<S>],
) -> Result<Table, CliError> {
    let ids = in_domain_bounds(p.n(), p.lambda());
    let mut headers = vec!["x".to_string(), "u_n".to_string()];
    headers.extend(ids.iter().map(|b| b.name().to_string()));
    headers.extend(["tightest_upper".to_string(), "tightest_lower".to_string()]);
    let mut table = Table::new(headers);
    for row in compare_bounds(p, grid)? {
        let mut cells = vec![cell(&row.x), cell(&row.u)];
        for id in &ids {
            let v = row.values.iter().find(|(b, _)| b == id).map(|(_, v)| v);
            cells.push(v.map_or(Cell::Missing, cell));
        }
        cells.push(row.tightest_upper.map(|b| b.name()).into());
        cells.push(row.tightest_lower.map(|b| b.name()).into());
        table.push(cells);
    }
    Ok(table)
}

pub fn zeros_cmd(
    n: &Degrees,
    lambda: &Number,
    mode: Option<Mode>,
    width: Option<&Number>,
    format: Format,
) -> Result<Outcome, CliError> {
    require_positive(n)?;
    lambdas_checked(std::slice::from_ref(lambda))?;
    let mode = resolve_mode(mode, lambda.exact().is_some(), false)?;
    if let Some(w) = width {
        if !(w.to_f64() > 0.0) {
            return Err(CliError::Usage(format!("width must be positive, got {w}")));
        }
    }
    let mut table = Table::new(["n", "lambda", "k", "zero", "zero_f64"]);
    let degrees: Vec<usize> = n.range().collect();
    let rows: Vec<Vec<Vec<Cell>>> = match mode {
        Mode::Exact => {
            let w = match width {
                Some(w) => exact_width(w).map_err(CliError::Usage)?,
                None => default_width::<Rational>(),
            };
            let l = lambda.exact().unwrap().clone();
            degrees
                .par_iter()
                .map(|&d| zero_rows(&UltraParams::new(d, l.clone())?, &w))
                .collect::<Result<_, _>>()?
        }
        Mode::Float => {
            let w = width.map_or_else(default_width::<f64>, Number::to_f64);
            degrees
                .par_iter()
                .map(|&d| zero_rows(&UltraParams::new(d, lambda.to_f64())?, &w))
                .collect::<Result<_, _>>()?
        }
    };
    for r in rows.into_iter().flatten() {
        table.push(r);
    }
    Ok(Outcome {
        text: table.render(format),
        ok: true,
    })
}

fn zero_rows<S: Scalar>(p: &UltraParams<S>, width: &S) -> Result<Vec<Vec<Cell>>, CliError> {
    let zs = zeros(p, width)?;
    Ok(zs
        .zeros
        .iter()
        .enumerate()
        .map(|(k, z)| {
            vec![
                p.n().into(),
                p.lambda().to_string().into(),
                (k + 1).into(),
                cell(z),
                z.to_f64().into(),
            ]
        })
        .collect())
}
