//! Polynomial constraint models of translational parallel manipulators.
//!
//! A model is a list of leg constraints `F(rho, X) = 0` over pose variables
//! `X` and actuated joint variables `rho`, with joint travel limits
//! `(min, max]` per leg. The Orthoglide (leg length 2, limits `(0, 4]`) ships
//! built in; other models load from JSON.

use crate::error::{Error, Result};
use crate::poly::{
    determinant, eliminate, parse_poly, Limits, MonomialOrder, MultiPoly, Rational, VarSet,
};
use crate::roots::{isolate, IsolatedRoot};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

/// Half-open joint travel interval `(min, max]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointLimits {
    pub min: Rational,
    pub max: Rational,
}

/// A sign choice (+/-) per leg selecting one IKP branch.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WorkingMode(Vec<i8>);

impl WorkingMode {
    pub fn new(signs: Vec<i8>) -> Self {
        assert!(signs.iter().all(|&s| s == 1 || s == -1));
        WorkingMode(signs)
    }

    pub fn all_plus(legs: usize) -> Self {
        WorkingMode(vec![1; legs])
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn legs(&self) -> usize {
        self.0.len()
    }

    /// All `2^legs` modes, in binary order with `+` before `-` per leg.
    pub fn enumerate(legs: usize) -> Vec<WorkingMode> {
        let mut out = Vec::with_capacity(1 << legs);
        for bits in 0..(1u32 << legs) {
            let signs = (0..legs)
                .map(|i| if bits & (1 << i) == 0 { 1 } else { -1 })
                .collect();
            out.push(WorkingMode(signs));
        }
        out
    }
}

impl std::fmt::Display for WorkingMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &s in &self.0 {
            write!(f, "{}", if s > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl FromStr for WorkingMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut signs = Vec::new();
        for ch in s.chars() {
            match ch {
                '+' => signs.push(1),
                '-' => signs.push(-1),
                _ => return Err(Error::InvalidMode(s.to_string())),
            }
        }
        if signs.is_empty() {
            return Err(Error::InvalidMode(s.to_string()));
        }
        Ok(WorkingMode(signs))
    }
}

/// The singularity loci of a model and their projections.
#[derive(Debug, Clone)]
pub struct SingularityLoci {
    /// det(A), the parallel-singularity polynomial in (rho, X).
    pub det_a: MultiPoly,
    /// det(B), the serial-singularity polynomial in (rho, X).
    pub det_b: MultiPoly,
    /// Projection of {F = 0, det(A) = 0} into pose space; primitive integer
    /// coefficients.
    pub workspace_surface: MultiPoly,
    /// Projection into joint space; primitive integer coefficients.
    pub jointspace_surface: MultiPoly,
    /// Joint-limit boundary projections, one per boundary polynomial: first
    /// the `min` boundary of each joint, then the `max` boundary.
    pub limit_surfaces: Vec<MultiPoly>,
}

/// One IKP solution: a working mode together with certified joint values.
#[derive(Debug, Clone)]
pub struct IkpSolution {
    pub mode: WorkingMode,
    pub joints: Vec<IsolatedRoot>,
    pub feasible: bool,
}

#[derive(Debug)]
pub struct RobotModel {
    name: String,
    vars: Arc<VarSet>,
    pose_vars: Vec<usize>,
    joint_vars: Vec<usize>,
    constraints: Vec<MultiPoly>,
    joint_limits: Vec<JointLimits>,
    limits: Limits,
    loci: OnceLock<std::result::Result<SingularityLoci, String>>,
}

impl RobotModel {
    /// The Orthoglide: three orthogonal prismatic legs of length `l = 2`,
    /// joint travel `(0, 4]`.
    pub fn orthoglide() -> Arc<RobotModel> {
        let vars = VarSet::new(vec!["x", "y", "z", "rho1", "rho2", "rho3"]);
        let constraints = vec![
            parse_poly("(x - rho1)^2 + y^2 + z^2 - 4", &vars).unwrap(),
            parse_poly("x^2 + (y - rho2)^2 + z^2 - 4", &vars).unwrap(),
            parse_poly("x^2 + y^2 + (z - rho3)^2 - 4", &vars).unwrap(),
        ];
        let lim = JointLimits {
            min: Rational::zero(),
            max: Rational::from(BigInt::from(4)),
        };
        Arc::new(RobotModel {
            name: "orthoglide".into(),
            vars,
            pose_vars: vec![0, 1, 2],
            joint_vars: vec![3, 4, 5],
            constraints,
            joint_limits: vec![lim.clone(), lim.clone(), lim],
            limits: Limits::default(),
            loci: OnceLock::new(),
        })
    }

    pub fn from_json_str(json: &str) -> Result<Arc<RobotModel>> {
        let file: ModelFile = serde_json::from_str(json)?;
        file.build()
    }

    pub fn to_json_string(&self) -> String {
        let file = ModelFile {
            name: self.name.clone(),
            pose_vars: self
                .pose_vars
                .iter()
                .map(|&i| self.vars.name(i).to_string())
                .collect(),
            joint_vars: self
                .joint_vars
                .iter()
                .map(|&i| self.vars.name(i).to_string())
                .collect(),
            params: Default::default(),
            constraints: self.constraints.iter().map(|c| c.to_string()).collect(),
            joint_limits: self
                .joint_limits
                .iter()
                .map(|l| JointLimitsFile {
                    min: rational_to_string(&l.min),
                    max: rational_to_string(&l.max),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("model serializes")
    }

    pub fn with_limits(self: &Arc<Self>, limits: Limits) -> Arc<RobotModel> {
        Arc::new(RobotModel {
            name: self.name.clone(),
            vars: self.vars.clone(),
            pose_vars: self.pose_vars.clone(),
            joint_vars: self.joint_vars.clone(),
            constraints: self.constraints.clone(),
            joint_limits: self.joint_limits.clone(),
            limits,
            loci: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn legs(&self) -> usize {
        self.constraints.len()
    }

    pub fn constraints(&self) -> &[MultiPoly] {
        &self.constraints
    }

    pub fn joint_limits(&self) -> &[JointLimits] {
        &self.joint_limits
    }

    pub fn resource_limits(&self) -> &Limits {
        &self.limits
    }

    pub fn pose_var_names(&self) -> Vec<&str> {
        self.pose_vars.iter().map(|&i| self.vars.name(i)).collect()
    }

    pub fn joint_var_names(&self) -> Vec<&str> {
        self.joint_vars.iter().map(|&i| self.vars.name(i)).collect()
    }

    pub fn pose_var_indices(&self) -> &[usize] {
        &self.pose_vars
    }

    pub fn joint_var_indices(&self) -> &[usize] {
        &self.joint_vars
    }

    /// Direct- and inverse-kinematics Jacobians:
    /// `A[i][j] = dF_i/dX_j`, `B[i][j] = dF_i/drho_j`.
    pub fn jacobians(&self) -> (Vec<Vec<MultiPoly>>, Vec<Vec<MultiPoly>>) {
        let a = self
            .constraints
            .iter()
            .map(|f| {
                self.pose_vars
                    .iter()
                    .map(|&j| f.partial_derivative(self.vars.name(j)).unwrap())
                    .collect()
            })
            .collect();
        let b = self
            .constraints
            .iter()
            .map(|f| {
                self.joint_vars
                    .iter()
                    .map(|&j| f.partial_derivative(self.vars.name(j)).unwrap())
                    .collect()
            })
            .collect();
        (a, b)
    }

    pub fn det_a(&self) -> MultiPoly {
        let (a, _) = self.jacobians();
        determinant(&a).expect("A is square")
    }

    pub fn det_b(&self) -> MultiPoly {
        let (_, b) = self.jacobians();
        determinant(&b).expect("B is square")
    }

    /// Project the parallel-singularity locus into pose space and joint
    /// space, and the joint-limit boundaries into pose space. Cached.
    pub fn project_singularities(&self) -> Result<SingularityLoci> {
        let entry = self
            .loci
            .get_or_init(|| self.compute_loci().map_err(|e| e.to_string()));
        match entry {
            Ok(l) => Ok(l.clone()),
            Err(msg) => Err(Error::DegenerateSpecialization(msg.clone())),
        }
    }

    fn compute_loci(&self) -> Result<SingularityLoci> {
        let det_a = self.det_a();
        let det_b = self.det_b();
        let mut system: Vec<MultiPoly> = self.constraints.clone();
        system.push(det_a.clone());

        let joint_names: Vec<&str> = self.joint_var_names();
        let pose_names: Vec<&str> = self.pose_var_names();

        let ws = eliminate(&system, &joint_names, &self.limits)?;
        let workspace_surface = single_surface(ws, "pose-space singularity projection")?;
        let js = eliminate(&system, &pose_names, &self.limits)?;
        let jointspace_surface = single_surface(js, "joint-space singularity projection")?;

        let limit_surfaces = self.project_joint_limits()?;

        Ok(SingularityLoci {
            det_a,
            det_b,
            workspace_surface,
            jointspace_surface,
            limit_surfaces,
        })
    }

    /// Project each joint-limit boundary `rho_i = min` / `rho_i = max` into
    /// pose space; one eliminant per boundary polynomial (all `min`
    /// boundaries first).
    pub fn project_joint_limits(&self) -> Result<Vec<MultiPoly>> {
        let joint_names: Vec<&str> = self.joint_var_names();
        let mut out = Vec::new();
        let bounds: Vec<Rational> = self
            .joint_limits
            .iter()
            .map(|l| l.min.clone())
            .chain(self.joint_limits.iter().map(|l| l.max.clone()))
            .collect();
        for (k, bound) in bounds.iter().enumerate() {
            let joint = self.joint_vars[k % self.legs()];
            let boundary = {
                let v = MultiPoly::var(&self.vars, self.vars.name(joint)).unwrap();
                v.checked_sub(&MultiPoly::constant(&self.vars, bound.clone()))
                    .unwrap()
            };
            let mut system = self.constraints.clone();
            system.push(boundary);
            let elim = eliminate(&system, &joint_names, &self.limits)?;
            out.push(single_surface(elim, "joint-limit projection")?);
        }
        Ok(out)
    }

    /// Specialize each constraint at the pose `point`; legs must decouple
    /// (each specialized constraint univariate in its own joint variable).
    fn specialized_legs(&self, point: &[Rational]) -> Result<Vec<MultiPoly>> {
        if point.len() != self.pose_vars.len() {
            return Err(Error::InvalidModel(format!(
                "expected {} pose coordinates",
                self.pose_vars.len()
            )));
        }
        let assign: Vec<(usize, Rational)> = self
            .pose_vars
            .iter()
            .cloned()
            .zip(point.iter().cloned())
            .collect();
        let mut seen = vec![false; self.legs()];
        let mut legs = vec![MultiPoly::zero(&self.vars); self.legs()];
        for f in &self.constraints {
            let s = f.eval_partial(&assign);
            let sup = s.support();
            let joint_pos = match sup.as_slice() {
                [one] => self.joint_vars.iter().position(|v| v == one),
                _ => None,
            };
            match joint_pos {
                Some(j) if !seen[j] => {
                    seen[j] = true;
                    legs[j] = s;
                }
                _ => {
                    return Err(Error::DegenerateSpecialization(
                        "constraints do not decouple into one joint per leg at this pose".into(),
                    ))
                }
            }
        }
        Ok(legs)
    }

    /// All real IKP solutions at a rational pose, labeled by working mode,
    /// with a joint-limit feasibility flag per solution.
    ///
    /// A pose outside the reachable set yields an empty list.
    pub fn ikp(&self, point: &[Rational]) -> Result<Vec<IkpSolution>> {
        let legs = self.specialized_legs(point)?;
        let mut per_leg: Vec<Vec<IsolatedRoot>> = Vec::with_capacity(self.legs());
        for (i, leg) in legs.iter().enumerate() {
            if leg.is_zero() || leg.is_constant() {
                return Err(Error::DegenerateSpecialization(format!(
                    "leg {} does not constrain its joint at this pose",
                    i + 1
                )));
            }
            if leg.degree_in(self.joint_vars[i]) > 2 {
                return Err(Error::DegenerateSpecialization(
                    "working modes are defined for legs quadratic in their joint".into(),
                ));
            }
            let uni = crate::uni::UniZ::from_multi(leg, self.joint_vars[i])?;
            let bound = uni.root_bound();
            let roots = isolate(leg, (-bound.clone(), bound))?;
            if roots.is_empty() {
                return Ok(vec![]);
            }
            per_leg.push(roots);
        }
        let mut out = Vec::new();
        for mode in WorkingMode::enumerate(self.legs()) {
            // a leg with a double root realizes only the "+" label
            let mut joints = Vec::with_capacity(self.legs());
            let mut skip = false;
            for (i, roots) in per_leg.iter().enumerate() {
                let sign = mode.signs()[i];
                match roots.len() {
                    1 => {
                        if sign < 0 {
                            skip = true;
                            break;
                        }
                        joints.push(roots[0].clone());
                    }
                    2 => {
                        let idx = if sign < 0 { 0 } else { 1 };
                        joints.push(roots[idx].clone());
                    }
                    _ => unreachable!("quadratic legs have at most two roots"),
                }
            }
            if skip {
                continue;
            }
            let feasible = joints
                .iter()
                .enumerate()
                .all(|(i, r)| self.joint_in_limits(&mut r.clone(), i));
            out.push(IkpSolution {
                mode,
                joints,
                feasible,
            });
        }
        Ok(out)
    }

    fn joint_in_limits(&self, root: &mut IsolatedRoot, leg: usize) -> bool {
        let lim = &self.joint_limits[leg];
        root.cmp_rational(&lim.min) == Ordering::Greater
            && root.cmp_rational(&lim.max) != Ordering::Greater
    }

    /// Total and joint-limit-feasible IKP solution counts at a pose.
    pub fn workspace_member(&self, point: &[Rational]) -> Result<(usize, usize)> {
        let legs = self.specialized_legs(point)?;
        let mut total = 1usize;
        let mut feasible = 1usize;
        for (i, leg) in legs.iter().enumerate() {
            if leg.is_zero() || leg.is_constant() {
                return Err(Error::DegenerateSpecialization(format!(
                    "leg {} does not constrain its joint at this pose",
                    i + 1
                )));
            }
            let uni = crate::uni::UniZ::from_multi(leg, self.joint_vars[i])?;
            let bound = uni.root_bound();
            let roots = isolate(leg, (-bound.clone(), bound))?;
            total *= roots.len();
            feasible *= roots
                .iter()
                .filter(|r| self.joint_in_limits(&mut (*r).clone(), i))
                .count();
        }
        if total == 0 {
            feasible = 0;
        }
        Ok((total, feasible))
    }

    /// Exact number of real direct-kinematics solutions at a rational joint
    /// configuration (distinct solutions; boundary multiplicities collapse).
    pub fn dkp_count(&self, joints: &[Rational]) -> Result<usize> {
        if joints.len() != self.joint_vars.len() {
            return Err(Error::InvalidModel(format!(
                "expected {} joint coordinates",
                self.joint_vars.len()
            )));
        }
        let assign: Vec<(usize, Rational)> = self
            .joint_vars
            .iter()
            .cloned()
            .zip(joints.iter().cloned())
            .collect();
        let pose_names: Vec<String> = self
            .pose_vars
            .iter()
            .map(|&i| self.vars.name(i).to_string())
            .collect();
        let pose_set = VarSet::new(pose_names);
        let specialized: Vec<MultiPoly> = self
            .constraints
            .iter()
            .map(|f| f.eval_partial(&assign).rename_onto(&pose_set))
            .collect::<Result<_>>()?;
        if specialized
            .iter()
            .any(|p| p.constant_value().map(|c| !c.is_zero()).unwrap_or(false))
        {
            return Ok(0);
        }
        if specialized.iter().all(|p| p.is_zero()) {
            return Err(Error::PositiveDimensional);
        }
        let gens: Vec<MultiPoly> = specialized.into_iter().filter(|p| !p.is_zero()).collect();
        let gb = crate::poly::groebner_basis(&gens, MonomialOrder::Lex, &self.limits)?;
        if gb
            .generators()
            .iter()
            .any(|g| g.constant_value().map(|c| !c.is_zero()).unwrap_or(false))
        {
            return Ok(0); // inconsistent system
        }
        if !gb.is_zero_dimensional() {
            return Err(Error::PositiveDimensional);
        }
        // triangular shape: each pose variable except the last appears as a
        // monic linear leading term; the last carries a univariate polynomial
        let n = pose_set.len();
        let mut univariate: Option<MultiPoly> = None;
        let mut linear = vec![false; n];
        for g in gb.generators() {
            let (lm, _) = g.leading_term(gb.order()).unwrap();
            let exps = lm.exponents();
            let nz: Vec<usize> = (0..n).filter(|&i| exps[i] != 0).collect();
            if nz.len() == 1 && nz[0] == n - 1 {
                univariate = Some(g.clone());
            }
            if nz.len() == 1 && exps[nz[0]] == 1 && nz[0] != n - 1 {
                linear[nz[0]] = true;
            }
        }
        let u = univariate.ok_or_else(|| {
            Error::DegenerateSpecialization("no univariate eliminant in lex basis".into())
        })?;
        if !linear[..n - 1].iter().all(|&b| b) {
            return Err(Error::DegenerateSpecialization(
                "specialized system is not in triangular shape".into(),
            ));
        }
        let uni = crate::uni::UniZ::from_multi(&u, n - 1)?;
        let bound = uni.root_bound();
        let roots = isolate(&u, (-bound.clone(), bound))?;
        Ok(roots.len())
    }
}

fn single_surface(mut polys: Vec<MultiPoly>, what: &str) -> Result<MultiPoly> {
    match polys.len() {
        1 => Ok(polys.pop().unwrap()),
        n => Err(Error::DegenerateSpecialization(format!(
            "{what}: expected a hypersurface, elimination returned {n} generators"
        ))),
    }
}

// ---------------------------------------------------------------------------
// JSON model format
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
struct JointLimitsFile {
    min: String,
    max: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct ModelFile {
    #[serde(default)]
    name: String,
    pose_vars: Vec<String>,
    joint_vars: Vec<String>,
    #[serde(default)]
    params: std::collections::BTreeMap<String, String>,
    constraints: Vec<String>,
    joint_limits: Vec<JointLimitsFile>,
}

impl ModelFile {
    fn build(self) -> Result<Arc<RobotModel>> {
        if self.constraints.len() != self.joint_vars.len() {
            return Err(Error::InvalidModel(format!(
                "{} constraints for {} joint variables",
                self.constraints.len(),
                self.joint_vars.len()
            )));
        }
        if self.joint_limits.len() != self.joint_vars.len() {
            return Err(Error::InvalidModel(
                "one joint_limits entry per joint variable is required".into(),
            ));
        }
        if self.pose_vars.is_empty() || self.joint_vars.is_empty() {
            return Err(Error::InvalidModel(
                "pose_vars and joint_vars must be nonempty".into(),
            ));
        }
        let mut names: Vec<String> = Vec::new();
        names.extend(self.pose_vars.iter().cloned());
        names.extend(self.joint_vars.iter().cloned());
        let param_names: Vec<String> = self.params.keys().cloned().collect();
        names.extend(param_names.iter().cloned());
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n.clone()) {
                return Err(Error::InvalidModel(format!("duplicate variable `{n}`")));
            }
        }
        let full_set = VarSet::new(names);
        let param_assign: Vec<(usize, Rational)> = self
            .params
            .iter()
            .map(|(k, v)| {
                Ok((
                    full_set.index_of(k).unwrap(),
                    parse_rational(v)
                        .ok_or_else(|| Error::InvalidModel(format!("bad rational `{v}`")))?,
                ))
            })
            .collect::<Result<_>>()?;

        let model_names: Vec<String> = self
            .pose_vars
            .iter()
            .chain(self.joint_vars.iter())
            .cloned()
            .collect();
        let vars = VarSet::new(model_names);
        let mut constraints = Vec::new();
        for src in &self.constraints {
            let raw = parse_poly(src, &full_set)?;
            let specialized = raw.eval_partial(&param_assign);
            let poly = specialized.rename_onto(&vars)?;
            if poly.is_zero() {
                return Err(Error::InvalidModel("constraint is identically zero".into()));
            }
            constraints.push(poly);
        }
        let joint_vars: Vec<usize> = (self.pose_vars.len()..vars.len()).collect();
        for (i, c) in constraints.iter().enumerate() {
            if !joint_vars.iter().any(|&j| c.involves(j)) {
                return Err(Error::InvalidModel(format!(
                    "constraint {} involves no joint variable",
                    i + 1
                )));
            }
        }
        let mut joint_limits = Vec::new();
        for jl in &self.joint_limits {
            let min = parse_rational(&jl.min)
                .ok_or_else(|| Error::InvalidModel(format!("bad rational `{}`", jl.min)))?;
            let max = parse_rational(&jl.max)
                .ok_or_else(|| Error::InvalidModel(format!("bad rational `{}`", jl.max)))?;
            if min >= max {
                return Err(Error::InvalidModel(
                    "joint limit min must be below max".into(),
                ));
            }
            joint_limits.push(JointLimits { min, max });
        }
        Ok(Arc::new(RobotModel {
            name: if self.name.is_empty() {
                "custom".into()
            } else {
                self.name
            },
            pose_vars: (0..self.pose_vars.len()).collect(),
            joint_vars,
            vars,
            constraints,
            joint_limits,
            limits: Limits::default(),
            loci: OnceLock::new(),
        }))
    }
}

/// Parse `"3"`, `"-3/4"`, or a decimal like `"1.13"` into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = ip.trim_start().starts_with('-');
        let i: BigInt = if ip == "-" || ip.is_empty() {
            BigInt::zero()
        } else {
            ip.parse().ok()?
        };
        let f: BigInt = fp.parse().ok()?;
        let scale = num_traits::pow::pow(BigInt::from(10), fp.len());
        let frac = Rational::new(f, scale);
        let whole = Rational::from(i);
        return Some(if negative || whole.is_negative() {
            whole - frac
        } else {
            whole + frac
        });
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rational::from(n))
}

pub fn rational_to_string(q: &Rational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, ratio};

    #[test]
    fn jacobian_rows_match_hand_derivatives() {
        let m = RobotModel::orthoglide();
        let (a, b) = m.jacobians();
        let vs = m.vars();
        assert_eq!(a[0][0], parse_poly("2*x - 2*rho1", vs).unwrap());
        assert_eq!(a[0][1], parse_poly("2*y", vs).unwrap());
        assert_eq!(a[0][2], parse_poly("2*z", vs).unwrap());
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert!(b[i][j].is_zero(), "B must be diagonal");
                }
            }
        }
        assert_eq!(b[0][0], parse_poly("-2*x + 2*rho1", vs).unwrap());
        assert_eq!(b[1][1], parse_poly("-2*y + 2*rho2", vs).unwrap());
        assert_eq!(b[2][2], parse_poly("-2*z + 2*rho3", vs).unwrap());
    }

    #[test]
    fn det_a_matches_closed_form() {
        let m = RobotModel::orthoglide();
        let expect = parse_poly(
            "-8*rho1*rho2*rho3 + 8*rho1*rho2*z + 8*rho1*rho3*y + 8*rho2*rho3*x",
            m.vars(),
        )
        .unwrap();
        assert_eq!(m.det_a(), expect);
        let eighth = m.det_a().scale(&ratio(1, 8));
        assert_eq!(
            eighth,
            parse_poly(
                "-rho1*rho2*rho3 + rho1*rho2*z + rho1*rho3*y + rho2*rho3*x",
                m.vars()
            )
            .unwrap()
        );
    }

    #[test]
    fn ikp_at_origin() {
        let m = RobotModel::orthoglide();
        let sols = m.ikp(&[int(0), int(0), int(0)]).unwrap();
        assert_eq!(sols.len(), 8);
        let feasible: Vec<_> = sols.iter().filter(|s| s.feasible).collect();
        assert_eq!(feasible.len(), 1);
        assert_eq!(feasible[0].mode, WorkingMode::all_plus(3));
        for j in &feasible[0].joints {
            assert_eq!(j.exact(), Some(&int(2)));
        }
    }

    #[test]
    fn ikp_unreachable_pose_is_empty() {
        let m = RobotModel::orthoglide();
        assert!(m.ikp(&[int(3), int(0), int(0)]).unwrap().is_empty());
    }

    #[test]
    fn ikp_near_table_row() {
        // pose rounded from the fourth singular posture; joint values agree
        // with the printed row to ~0.02 (the input itself is rounded)
        let m = RobotModel::orthoglide();
        let sols = m.ikp(&[ratio(113, 100), ratio(35, 100), int(1)]).unwrap();
        assert_eq!(sols.len(), 8);
        let plus = sols
            .iter()
            .find(|s| s.mode == WorkingMode::all_plus(3))
            .unwrap();
        let targets = [ratio(283, 100), ratio(166, 100), ratio(260, 100)];
        for (r, t) in plus.joints.iter().zip(&targets) {
            let refined = r.refine(&ratio(1, 10_000));
            let mid = refined.interval().mid();
            assert!((mid - t).abs() < ratio(2, 100), "joint not near table row");
        }
        assert!(plus.feasible);
    }

    #[test]
    fn workspace_membership_counts() {
        let m = RobotModel::orthoglide();
        assert_eq!(
            m.workspace_member(&[int(0), int(0), int(0)]).unwrap(),
            (8, 1)
        );
        assert_eq!(
            m.workspace_member(&[int(1), int(1), int(1)]).unwrap(),
            (8, 1)
        );
        // legs 1 and 2 have negative discriminants at (0, 0, 2.5)
        let (total, feas) = m.workspace_member(&[int(0), int(0), ratio(5, 2)]).unwrap();
        assert_eq!(total, 0);
        assert_eq!(feas, 0);
        assert!(total < 8);
    }

    #[test]
    fn dkp_counts() {
        let m = RobotModel::orthoglide();
        assert_eq!(m.dkp_count(&[int(2), int(2), int(2)]).unwrap(), 2);
        assert_eq!(m.dkp_count(&[int(10), int(10), int(10)]).unwrap(), 0);
        // on the joint-space singularity surface: rho1^2 + rho2^2 = 16 with
        // rho3 = 0 collapses the two solutions into one
        assert_eq!(
            m.dkp_count(&[ratio(16, 5), ratio(12, 5), int(0)]).unwrap(),
            1
        );
        // fully degenerate specialization is reported, not enumerated
        assert!(matches!(
            m.dkp_count(&[int(0), int(0), int(0)]),
            Err(Error::PositiveDimensional)
        ));
    }

    #[test]
    fn joint_limit_projections_match_boundary_spheres() {
        let m = RobotModel::orthoglide();
        let mu = m.project_joint_limits().unwrap();
        assert_eq!(mu.len(), 6);
        let vs = m.vars();
        let sphere = parse_poly("x^2 + y^2 + z^2 - 4", vs).unwrap();
        assert_eq!(mu[0], sphere);
        assert_eq!(mu[1], sphere);
        assert_eq!(mu[2], sphere);
        assert_eq!(mu[3], parse_poly("x^2 + y^2 + z^2 - 8*x + 12", vs).unwrap());
        assert_eq!(mu[4], parse_poly("x^2 + y^2 + z^2 - 8*y + 12", vs).unwrap());
        assert_eq!(mu[5], parse_poly("x^2 + y^2 + z^2 - 8*z + 12", vs).unwrap());
    }

    #[test]
    fn mode_round_trip() {
        let m: WorkingMode = "+-+".parse().unwrap();
        assert_eq!(m.to_string(), "+-+");
        assert_eq!(WorkingMode::enumerate(3).len(), 8);
        assert!("+0-".parse::<WorkingMode>().is_err());
    }

    #[test]
    fn model_json_round_trip() {
        let m = RobotModel::orthoglide();
        let json = m.to_json_string();
        let m2 = RobotModel::from_json_str(&json).unwrap();
        assert_eq!(m2.constraints(), m.constraints());
        assert_eq!(m2.joint_limits(), m.joint_limits());
    }

    #[test]
    fn model_json_with_params() {
        let json = r#"{
            "name": "orthoglide-l2",
            "pose_vars": ["x", "y", "z"],
            "joint_vars": ["rho1", "rho2", "rho3"],
            "params": {"l": "2"},
            "constraints": [
                "(x - rho1)^2 + y^2 + z^2 - l^2",
                "x^2 + (y - rho2)^2 + z^2 - l^2",
                "x^2 + y^2 + (z - rho3)^2 - l^2"
            ],
            "joint_limits": [
                {"min": "0", "max": "4"},
                {"min": "0", "max": "4"},
                {"min": "0", "max": "4"}
            ]
        }"#;
        let m = RobotModel::from_json_str(json).unwrap();
        assert_eq!(m.constraints(), RobotModel::orthoglide().constraints());
    }

    #[test]
    fn bad_model_files_error_cleanly() {
        for bad in [
            "{",
            r#"{"pose_vars":["x"],"joint_vars":[],"constraints":[],"joint_limits":[]}"#,
            r#"{"pose_vars":["x"],"joint_vars":["r"],"constraints":["x + w"],"joint_limits":[{"min":"0","max":"4"}]}"#,
            r#"{"pose_vars":["x"],"joint_vars":["r"],"constraints":["x^2"],"joint_limits":[{"min":"0","max":"4"}]}"#,
            r#"{"pose_vars":["x"],"joint_vars":["r"],"constraints":["x + r"],"joint_limits":[{"min":"4","max":"0"}]}"#,
        ] {
            assert!(RobotModel::from_json_str(bad).is_err(), "accepted: {bad}");
        }
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3"), Some(int(3)));
        assert_eq!(parse_rational("-3/4"), Some(ratio(-3, 4)));
        assert_eq!(parse_rational("1.13"), Some(ratio(113, 100)));
        assert_eq!(parse_rational("-0.5"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("2/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
