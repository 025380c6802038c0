use super::{mat_det, PolyMatrix};
use crate::arith::{Context, DetProfile};
use crate::error::{Error, Result};

/// Outcome of checking a candidate pair `(Phi, Psi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub phi_psi_is_f: bool,
    pub psi_phi_is_f: bool,
    pub det_product_is_f_power: bool,
    pub phi_reduced: bool,
    pub psi_reduced: bool,
    pub det_phi: Option<DetProfile>,
    pub det_psi: Option<DetProfile>,
    /// Both products equal `F*I` and `det Phi * det Psi = F^d`.
    /// Reducedness is reported separately.
    pub ok: bool,
}

pub fn verify_factorization(
    ctx: &Context,
    phi: &PolyMatrix,
    psi: &PolyMatrix,
) -> Result<VerificationReport> {
    for m in [phi, psi] {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
    }
    if phi.rows() != psi.rows() {
        return Err(Error::ShapeMismatch(format!(
            "phi is {0}x{0}, psi is {1}x{1}",
            phi.rows(),
            psi.rows()
        )));
    }
    let d = phi.rows();
    let f_id = PolyMatrix::scalar(d, ctx.f());
    let phi_psi_is_f = phi.mul(psi)? == f_id;
    let psi_phi_is_f = psi.mul(phi)? == f_id;
    let det_phi = mat_det(phi)?;
    let det_psi = mat_det(psi)?;
    let det_product_is_f_power = &det_phi * &det_psi == ctx.f().pow(d as u32);
    let profile = |p| {
        if crate::arith::BiPoly::is_zero(p) {
            Ok(None)
        } else {
            ctx.decompose(p)
        }
    };
    Ok(VerificationReport {
        phi_psi_is_f,
        psi_phi_is_f,
        det_product_is_f_power,
        phi_reduced: phi.is_reduced(),
        psi_reduced: psi.is_reduced(),
        det_phi: profile(&det_phi)?,
        det_psi: profile(&det_psi)?,
        ok: phi_psi_is_f && psi_phi_is_f && det_product_is_f_power,
    })
}
