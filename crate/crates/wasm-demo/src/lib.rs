//! Browser bindings: derive a Hamiltonian, measure convergence, expand the
//! gamma series. Each export returns a string (rendered or JSON) so the page
//! needs no extra glue.

use fw_core::engine::{assemble_hamiltonian, Model, ModelSpec};
use fw_core::numeric::{convergence_check, convergence_sample, FieldLayout, SampleGenerator};
use fw_core::resummation::gamma_series_suite;
use serde_json::json;
use wasm_bindgen::prelude::*;

fn spec_for(model: &str, order: usize) -> Result<ModelSpec, String> {
    let spec = match model {
        "dirac" => ModelSpec::dirac(order),
        "dirac-pauli" => ModelSpec::dirac_pauli(order),
        other => return Err(format!("unknown model `{other}`")),
    };
    if order > 14 {
        return Err(format!("order {order} exceeds 14"));
    }
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

/// Hamiltonian orders as `text`, `latex` or `json`.
pub fn derive_hamiltonian(model: &str, order: usize, format: &str) -> Result<String, String> {
    let r = assemble_hamiltonian(&spec_for(model, order)?).map_err(|e| e.to_string())?;
    let rows: Vec<(usize, String)> = r
        .h
        .entries
        .iter()
        .map(|(k, e)| {
            let body = match format {
                "latex" => e.to_physical_latex(),
                _ => e.to_text(),
            };
            (*k, body)
        })
        .collect();
    match format {
        "json" => Ok(serde_json::to_string(&r.h).expect("series serialize")),
        "latex" => Ok(rows.iter().map(|(k, b)| format!("H^{{({k})}} = {b}")).collect::<Vec<_>>().join("\n")),
        "text" => Ok(rows.iter().map(|(k, b)| format!("H^({k}) = {b}")).collect::<Vec<_>>().join("\n")),
        other => Err(format!("unknown format `{other}`")),
    }
}

/// Distance to the classical Hamiltonian at `xi`, `xi/2`, `xi/4` and the
/// observed orders between them, as JSON.
pub fn measure_convergence(model: &str, order: usize, xi: f64, seed: u64) -> Result<String, String> {
    if xi.is_nan() || xi <= 0.0 || xi >= 1.0 {
        return Err("xi must lie in (0, 1)".into());
    }
    let spec = spec_for(model, order)?;
    let r = assemble_hamiltonian(&spec).map_err(|e| e.to_string())?;
    let g = if spec.model == Model::DiracPauli { 2.2 } else { 2.0 };
    let mut gen = SampleGenerator::new(seed);
    let s = convergence_sample(&mut gen, xi, FieldLayout::Zeeman, g);
    let c = convergence_check(&r.h, order, &s, &[1.0, 0.5, 0.25]).map_err(|e| e.to_string())?;
    Ok(json!({
        "order": order,
        "expected_slope": order + 2,
        "scales": c.scales,
        "deltas": c.deltas,
        "slopes": c.slopes,
    })
    .to_string())
}

/// Exact coefficients of gamma, 1/gamma and the spin-orbit weight in
/// powers of `xi^2`, as JSON.
pub fn gamma_coefficients(terms: usize) -> Result<String, String> {
    if terms == 0 || terms > 40 {
        return Err("terms must be between 1 and 40".into());
    }
    let g = gamma_series_suite(terms - 1);
    let show = |s: &fw_core::resummation::RationalSeries| -> Vec<String> {
        s.coeffs().iter().map(|c| c.to_string()).collect()
    };
    Ok(json!({
        "gamma": show(&g.gamma),
        "inv_gamma": show(&g.inv_gamma),
        "spin_orbit": show(&g.spin_orbit),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn derive(model: &str, order: usize, format: &str) -> Result<String, String> {
    derive_hamiltonian(model, order, format)
}

#[wasm_bindgen]
pub fn convergence(model: &str, order: usize, xi: f64, seed: u64) -> Result<String, String> {
    measure_convergence(model, order, xi, seed)
}

#[wasm_bindgen]
pub fn gamma_series(terms: usize) -> Result<String, String> {
    gamma_coefficients(terms)
}
