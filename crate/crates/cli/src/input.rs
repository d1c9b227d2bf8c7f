//! JSON input files: tetrahedra, projections and rotations.

use std::fs;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use tetraproj_core::{quat_from_axis_angle, ProjectionQuad, Tetrahedron, UnitQuaternion, Vec3};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TetrahedronFile {
    pub vertices: [[f64; 3]; 4],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProjectionFile {
    pub points: [[f64; 2]; 4],
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RotationFile {
    Quaternion { quaternion: [f64; 4] },
    AxisAngle { axis: [f64; 3], angle_rad: f64 },
}

impl RotationFile {
    pub fn to_quaternion(&self) -> Result<UnitQuaternion, String> {
        match self {
            RotationFile::Quaternion { quaternion } => UnitQuaternion::from_array(*quaternion),
            RotationFile::AxisAngle { axis, angle_rad } => quat_from_axis_angle(&Vec3::from(*axis), *angle_rad),
        }
        .map_err(|e| format!("invalid rotation: {e}"))
    }
}

/// Reads a file, or standard input when the path is `-`.
pub fn read_source(path: &Path) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))
    }
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, String> {
    serde_json::from_str(&read_source(path)?).map_err(|e| format!("parsing {}: {e}", path.display()))
}

pub fn load_tetrahedron(path: &Path) -> Result<Tetrahedron, String> {
    let f: TetrahedronFile = parse(path)?;
    Tetrahedron::from_arrays(f.vertices).map_err(|e| format!("invalid tetrahedron: {e}"))
}

pub fn load_projection(path: &Path) -> Result<ProjectionQuad, String> {
    let f: ProjectionFile = parse(path)?;
    ProjectionQuad::from_arrays(f.points).map_err(|e| format!("invalid projection: {e}"))
}

pub fn load_rotation(path: &Path) -> Result<UnitQuaternion, String> {
    parse::<RotationFile>(path)?.to_quaternion()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_forms() {
        let q: RotationFile = serde_json::from_str(r#"{"quaternion": [0, 0, 0, 1]}"#).unwrap();
        assert_eq!(q.to_quaternion().unwrap().to_array(), [0.0, 0.0, 0.0, 1.0]);
        let a: RotationFile = serde_json::from_str(r#"{"axis": [0, 0, 2], "angle_rad": 3.141592653589793}"#).unwrap();
        assert!(a.to_quaternion().is_err());
        let a: RotationFile = serde_json::from_str(r#"{"axis": [0, 0, 1], "angle_rad": 3.141592653589793}"#).unwrap();
        assert!((a.to_quaternion().unwrap().d() - 1.0).abs() < 1e-15);
        assert!(serde_json::from_str::<RotationFile>(r#"{"axis": [0, 0, 1]}"#).is_err());
    }
}
