/// Vertex coordinates of the regular octahedron, indexed by label.
///
/// Labels: 0 = +z, 1 = +x, 2 = +y, 3 = -z, 4 = -x, 5 = -y, so the
/// antipode of `a` is `a + 3 mod 6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctahedronModel {
    coords: [[i32; 3]; 6],
}

impl OctahedronModel {
    pub fn standard() -> Self {
        OctahedronModel {
            coords: [[0, 0, 1], [1, 0, 0], [0, 1, 0], [0, 0, -1], [-1, 0, 0], [0, -1, 0]],
        }
    }

    pub fn coords(&self, label: usize) -> [i32; 3] {
        self.coords[label]
    }

    pub fn label_of(&self, v: [i32; 3]) -> Option<usize> {
        self.coords.iter().position(|&c| c == v)
    }

    pub fn antipode(&self, label: usize) -> usize {
        let [x, y, z] = self.coords[label];
        self.label_of([-x, -y, -z]).expect("vertex set is symmetric")
    }

    /// Counterclockwise quarter turn of vertex `a` about the axis through
    /// vertex `b`, seen from `b`: `v -> b x v + (b.v) b` for unit `b`.
    pub fn rotate(&self, a: usize, b: usize) -> usize {
        let [ax, ay, az] = self.coords[b];
        let [vx, vy, vz] = self.coords[a];
        let dot = ax * vx + ay * vy + az * vz;
        let image = [
            ay * vz - az * vy + dot * ax,
            az * vx - ax * vz + dot * ay,
            ax * vy - ay * vx + dot * az,
        ];
        self.label_of(image).expect("quarter turns permute the vertices")
    }
}
