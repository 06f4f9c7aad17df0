use std::io::BufRead;

use quorbit_core::orbit_space::CONVENTION;
use quorbit_core::state_space::{check_state_bloch_tol, check_state_traces_tol};
use quorbit_core::{
    bezoutian, casimirs, char_coefficients, discriminant, from_bloch, gell_mann_basis, orbit_from_spectrum,
    ordered_domain_check, rank_strata, sample_states, spectrum_from_orbit, structure_constants, to_bloch,
    trace_invariants, weight_vectors, BlochVector, HermitianMatrix, OrbitCoordinates, Spectrum,
};
use serde::Serialize;
use serde_json::Value;

use crate::args::{CheckArgs, Cli, Command, OrbitArgs, ParamArgs, SampleArgs, StateArgs};
use crate::records::*;
use crate::{cell, figure, CliError, Outcome, Output, Result, Table};

pub fn execute(cli: &Cli, stdin: &mut dyn BufRead) -> Result<Outcome> {
    let csv = cli.csv;
    match &cli.command {
        Command::Basis(a) => basis(a.n, csv).map(Into::into),
        Command::Tensors(a) => tensors(a.n, csv).map(Into::into),
        Command::Check(a) => check(a, csv, stdin),
        Command::Invariants(a) => invariants(a, csv).map(Into::into),
        Command::Param(a) => param(a, csv).map(Into::into),
        Command::Boundary(a) => boundary(a, csv).map(Into::into),
        Command::Sample(a) => sample(a, csv).map(Into::into),
        Command::Figure(a) => figure::figure(a, csv).map(Into::into),
    }
}

fn json<T: Serialize>(records: &[T]) -> Result<Output> {
    Ok(Output::Json(records.iter().map(serde_json::to_value).collect::<serde_json::Result<Vec<Value>>>()?))
}

fn cells(xs: &[f64]) -> impl Iterator<Item = String> + '_ {
    xs.iter().map(|&x| cell(x))
}

fn numbered(prefix: &str, count: usize) -> impl Iterator<Item = String> + '_ {
    (1..=count).map(move |i| format!("{prefix}{i}"))
}

fn expect_dim(expected: Option<usize>, found: usize) -> Result<()> {
    match expected {
        Some(n) if n != found => Err(CliError::Input(format!("--N is {n} but the input has dimension {found}"))),
        _ => Ok(()),
    }
}

fn basis(n: usize, csv: bool) -> Result<Output> {
    let basis = gell_mann_basis(n)?;
    let cartan = basis.cartan_indices();
    if csv {
        let mut t = Table::new(["index", "row", "col", "re", "im"]);
        for (idx, el) in basis.elements().iter().enumerate() {
            for (r, row) in el.as_matrix().rows().iter().enumerate() {
                for (c, z) in row.iter().enumerate() {
                    t.push(vec![
                        (idx + 1).to_string(),
                        (r + 1).to_string(),
                        (c + 1).to_string(),
                        cell(z.re),
                        cell(z.im),
                    ]);
                }
            }
        }
        return Ok(Output::Table(t));
    }
    let elements = basis
        .elements()
        .iter()
        .enumerate()
        .map(|(idx, el)| BasisElement {
            index: idx + 1,
            cartan: cartan.contains(&idx),
            matrix: matrix_rows(el.as_matrix()),
        })
        .collect();
    json(&[BasisRecord { n, elements }])
}

fn tensors(n: usize, csv: bool) -> Result<Output> {
    let tensors = structure_constants(&gell_mann_basis(n)?)?;
    let entries = |it: &mut dyn Iterator<Item = ((usize, usize, usize), f64)>| -> Vec<TensorEntry> {
        it.map(|((i, j, k), value)| TensorEntry { i: i + 1, j: j + 1, k: k + 1, value }).collect()
    };
    let d = entries(&mut tensors.d_entries());
    let f = entries(&mut tensors.f_entries());
    if csv {
        let mut t = Table::new(["tensor", "i", "j", "k", "value"]);
        for (name, list) in [("d", &d), ("f", &f)] {
            for e in list.iter() {
                t.push(vec![name.into(), e.i.to_string(), e.j.to_string(), e.k.to_string(), cell(e.value)]);
            }
        }
        return Ok(Output::Table(t));
    }
    json(&[TensorRecord { n, d, f }])
}

enum StateInput {
    Bloch(BlochVector),
    Matrix(HermitianMatrix),
}

impl StateInput {
    fn dim(&self) -> usize {
        match self {
            StateInput::Bloch(xi) => xi.dim(),
            StateInput::Matrix(rho) => rho.dim(),
        }
    }
}

fn state_from_flags(a: &StateArgs) -> Result<Option<StateInput>> {
    let input = match (&a.xi, &a.spectrum) {
        (Some(xi), _) => StateInput::Bloch(BlochVector::new(xi.clone())?),
        (None, Some(spec)) => StateInput::Matrix(HermitianMatrix::diagonal(spec)),
        (None, None) => return Ok(None),
    };
    expect_dim(a.n, input.dim())?;
    Ok(Some(input))
}

fn state_from_record(line: &str, expected: Option<usize>) -> Result<StateInput> {
    let rec: StateRecord = serde_json::from_str(line)?;
    let input = match (rec.xi, rec.rho) {
        (Some(xi), None) => StateInput::Bloch(BlochVector::new(xi)?),
        (None, Some(rows)) => StateInput::Matrix(matrix_from_rows(&rows)?),
        _ => return Err(CliError::Input("record needs exactly one of \"xi\" and \"rho\"".into())),
    };
    expect_dim(rec.n, input.dim())?;
    expect_dim(expected, input.dim())?;
    Ok(input)
}

/// Bloch inputs go through the characteristic coefficients of `ρ(ξ)`;
/// matrix inputs through their trace invariants.
fn classify(input: &StateInput, tol: f64) -> Result<Verdict> {
    let c = match input {
        StateInput::Bloch(xi) => check_state_bloch_tol(xi, tol)?,
        StateInput::Matrix(rho) => check_state_traces_tol(&trace_invariants(rho, rho.dim())?, tol)?,
    };
    Ok(Verdict::from(&c))
}

fn check(a: &CheckArgs, csv: bool, stdin: &mut dyn BufRead) -> Result<Outcome> {
    let mut verdicts = Vec::new();
    match state_from_flags(&a.state)? {
        Some(input) => verdicts.push(classify(&input, a.tol)?),
        None => {
            for (k, line) in stdin.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let verdict = state_from_record(&line, a.state.n)
                    .and_then(|input| classify(&input, a.tol))
                    .map_err(|e| CliError::Input(format!("line {}: {e}", k + 1)))?;
                verdicts.push(verdict);
            }
            if verdicts.is_empty() {
                return Err(CliError::Input("no input: pass --xi, --spectrum, or JSON lines on stdin".into()));
            }
        }
    }
    let all_states = verdicts.iter().all(|v| v.is_state);
    let output = if csv {
        let mut t = Table::new(["is_state", "rank", "stratum", "margin"]);
        for v in &verdicts {
            t.push(vec![v.is_state.to_string(), v.rank.to_string(), v.stratum.clone(), cell(v.margin)]);
        }
        Output::Table(t)
    } else {
        json(&verdicts)?
    };
    Ok(Outcome { output, all_states })
}

fn invariants(a: &StateArgs, csv: bool) -> Result<Output> {
    let input = state_from_flags(a)?.ok_or_else(|| CliError::Input("pass --xi or --spectrum".into()))?;
    let (xi, rho) = match input {
        StateInput::Bloch(xi) => {
            let rho = from_bloch(&xi)?;
            (xi, rho)
        }
        StateInput::Matrix(rho) => (to_bloch(&rho)?, rho),
    };
    let n = rho.dim();
    let t = trace_invariants(&rho, n)?;
    let s = char_coefficients(&t)?;
    let c = casimirs(xi.components(), &structure_constants(&gell_mann_basis(n)?)?)?;
    let rec = InvariantsRecord {
        n,
        t: (1..=n).map(|k| t.t(k)).collect(),
        s: s.values().to_vec(),
        disc: discriminant(&t)?,
        bezoutian_rank: bezoutian(&t)?.rank()?,
        casimirs: CasimirRecord::from(&c),
    };
    if csv {
        let mut tab = Table::new(["quantity", "index", "value"]);
        for (name, values) in [("t", &rec.t), ("S", &rec.s)] {
            for (k, &v) in values.iter().enumerate() {
                tab.push(vec![name.into(), (k + 1).to_string(), cell(v)]);
            }
        }
        tab.push(vec!["disc".into(), String::new(), cell(rec.disc)]);
        tab.push(vec!["bezoutian_rank".into(), String::new(), rec.bezoutian_rank.to_string()]);
        for (k, v) in [c.c2, c.c3, c.c4, c.c5, c.c6].into_iter().enumerate() {
            tab.push(vec!["c".into(), (k + 2).to_string(), cell(v)]);
        }
        return Ok(Output::Table(tab));
    }
    json(&[rec])
}

/// Orbit coordinates from `--spectrum`, or from `--r` and `--angles`.
fn orbit_from_flags(a: &OrbitArgs) -> Result<OrbitCoordinates> {
    if let Some(spec) = &a.spectrum {
        let spec = Spectrum::new(spec.clone())?;
        expect_dim(a.n, spec.dim())?;
        return Ok(orbit_from_spectrum(&spec, &gell_mann_basis(spec.dim())?)?);
    }
    let n = a.n.ok_or_else(|| CliError::Input("--N is required with --r".into()))?;
    let r = a.r.ok_or_else(|| CliError::Input("pass --spectrum, or --r with --angles".into()))?;
    Ok(OrbitCoordinates::new(n, r, a.angles.clone().unwrap_or_default())?)
}

fn param(a: &ParamArgs, csv: bool) -> Result<Output> {
    if a.inverse {
        if a.orbit.spectrum.is_some() {
            return Err(CliError::Input("--inverse takes --r and --angles, not --spectrum".into()));
        }
        let c = orbit_from_flags(&a.orbit)?;
        let w = weight_vectors(c.dim)?;
        let s = spectrum_from_orbit(&c, &w)?;
        let rec = SpectrumRecord {
            n: c.dim,
            spectrum: s.raw.clone(),
            sorted: s.sorted.values().to_vec(),
            valid: s.valid,
            ordered: ordered_domain_check(&c, &w)?,
            convention: CONVENTION,
        };
        if csv {
            let mut header = vec!["convention".to_string(), "N".into(), "valid".into(), "ordered".into()];
            header.extend(numbered("p", c.dim));
            let mut t = Table::new(header);
            let mut row = vec![CONVENTION.into(), c.dim.to_string(), rec.valid.to_string(), rec.ordered.to_string()];
            row.extend(cells(&rec.spectrum));
            t.push(row);
            return Ok(Output::Table(t));
        }
        return json(&[rec]);
    }
    if a.orbit.spectrum.is_none() {
        return Err(CliError::Input("pass --spectrum, or --inverse with --r and --angles".into()));
    }
    let c = orbit_from_flags(&a.orbit)?;
    if csv {
        let mut header = vec!["convention".to_string(), "N".into(), "r".into()];
        header.extend(numbered("angle", c.angles.len()));
        let mut t = Table::new(header);
        let mut row = vec![CONVENTION.into(), c.dim.to_string(), cell(c.radius)];
        row.extend(cells(&c.angles));
        t.push(row);
        return Ok(Output::Table(t));
    }
    json(&[OrbitRecord { n: c.dim, r: c.radius, angles: c.angles, convention: CONVENTION }])
}

fn boundary(a: &OrbitArgs, csv: bool) -> Result<Output> {
    let c = orbit_from_flags(a)?;
    let w = weight_vectors(c.dim)?;
    let rep = rank_strata(&c, &w)?;
    let s = spectrum_from_orbit(&c, &w)?;
    let rec = BoundaryRecord {
        n: c.dim,
        r: c.radius,
        angles: c.angles.clone(),
        spectrum: s.sorted.values().to_vec(),
        ordered: ordered_domain_check(&c, &w)?,
        label: rep.label,
        multiplicities: rep.multiplicities,
        orbit_dim: rep.orbit_dim,
        rank: rep.rank,
        stratum: rep.stratum.label(),
        effective: rep.effective.map(|(k, radius)| EffectiveRecord { kind: k.name(), radius }),
        convention: CONVENTION,
    };
    if csv {
        let mut t = Table::new([
            "convention",
            "N",
            "r",
            "label",
            "rank",
            "orbit_dim",
            "stratum",
            "effective_kind",
            "effective_radius",
        ]);
        let (kind, radius) = match &rec.effective {
            Some(e) => (e.kind.to_string(), cell(e.radius)),
            None => (String::new(), String::new()),
        };
        t.push(vec![
            CONVENTION.into(),
            rec.n.to_string(),
            cell(rec.r),
            rec.label.clone(),
            rec.rank.to_string(),
            rec.orbit_dim.to_string(),
            rec.stratum.clone(),
            kind,
            radius,
        ]);
        return Ok(Output::Table(t));
    }
    json(&[rec])
}

fn sample(a: &SampleArgs, csv: bool) -> Result<Output> {
    let states = sample_states(a.n, a.count, a.mode, a.seed)?;
    if a.matrix {
        if csv {
            return Err(CliError::Input("--matrix output is JSON only".into()));
        }
        let recs: Vec<MatrixRecord> =
            states.iter().map(|rho| MatrixRecord { n: a.n, rho: matrix_rows(rho.as_matrix()) }).collect();
        return json(&recs);
    }
    let basis = gell_mann_basis(a.n)?;
    let recs = states
        .iter()
        .map(|rho| {
            Ok(BlochRecord { n: a.n, xi: quorbit_core::state_space::to_bloch_with(&basis, rho)?.into_components() })
        })
        .collect::<Result<Vec<_>>>()?;
    if csv {
        let mut t = Table::new(numbered("xi", a.n * a.n - 1));
        for r in &recs {
            t.push(cells(&r.xi).collect());
        }
        return Ok(Output::Table(t));
    }
    json(&recs)
}
