#ifndef SINGCLASS_SCENE_HPP
#define SINGCLASS_SCENE_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "singclass/genus.hpp"
#include "singclass/germ.hpp"

namespace singclass {

enum class SceneMode { ambient, hypersurface, complete_intersection };

const char* mode_name(SceneMode m);

struct SingularPoint {
    SingularityGerm germ;
    long count = 1;
    bool qhm = false;
};

/* Per-point reduced Euler characteristic of the iterated local Milnor
 * fiber of an ordered tuple, supplied by the user for complete
 * intersections. */
struct CiLocalDatum {
    long chi_tilde = 0;
    long count = 1;
};

struct SceneOptions {
    std::optional<int> order;
    std::vector<GenusKind> kinds;
    std::map<std::string, long> user_sigma;   // germ label -> signature
    std::vector<CiLocalDatum> ci_local;
    std::optional<long> declared_euler;
    std::optional<long> expected_du_bois_discrepancy;
};

/* One unit of evaluation: a complete intersection of the given multidegree
 * in P^n with a finite list of isolated singular points. */
struct Scene {
    int ambient_dim = 0;
    std::vector<int> degrees;
    std::vector<SingularPoint> points;
    SceneMode mode = SceneMode::ambient;
    SceneOptions options;
    std::string name;

    int codim() const { return static_cast<int>(degrees.size()); }
    int dim() const { return ambient_dim - codim(); }
    bool smooth() const { return points.empty(); }
    bool all_qhm() const;
    bool all_du_bois() const;
    /* Truncation order used for genus series; degrees and classes are
     * always computed mod h^(n+1). */
    int series_order() const;

    void validate() const;

    static Scene from_json(const nlohmann::json& j, bool strict = false);
    static Scene load_file(const std::string& path, bool strict = false);
    nlohmann::json to_json() const;
};

} // namespace singclass

#endif
