#include <fstream>
#include <set>
#include <string>

#include "waveray/errors.hpp"
#include "waveray/io.hpp"
#include "waveray/scenarios.hpp"

namespace waveray {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ValidationError(path + ": " + what);
}

double get_number(const json& j, const std::string& path) {
    if (!j.is_number())
        fail(path, "expected a number");
    return j.get<double>();
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    return j.get<int>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string())
        fail(path, "expected a string");
    return j.get<std::string>();
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& prefix) {
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key))
            fail(prefix + key, "unknown key");
}

Profile parse_profile(const json& j) {
    if (!j.is_object())
        fail("profile", "expected an object");
    const std::string type = j.contains("type") ? get_string(j.at("type"), "profile.type")
                                                : std::string("gaussian");
    if (type == "gaussian") {
        reject_unknown(j, {"type"}, "profile.");
        return GaussianProfile{};
    }
    if (type == "two_gaussian") {
        reject_unknown(j, {"type", "offset"}, "profile.");
        TwoGaussianProfile p;
        if (j.contains("offset"))
            p.offset = get_number(j.at("offset"), "profile.offset");
        return p;
    }
    fail("profile.type", "unknown profile '" + type + "'");
}

FieldSpec parse_field(const json& j) {
    if (!j.is_object())
        fail("field", "expected an object");
    if (!j.contains("type"))
        fail("field.type", "missing");
    const std::string type = get_string(j.at("type"), "field.type");
    auto num = [&](const char* key, double fallback) {
        return j.contains(key) ? get_number(j.at(key), std::string("field.") + key) : fallback;
    };
    if (type == "free") {
        reject_unknown(j, {"type"}, "field.");
        return FreeField{};
    }
    if (type == "constant_force") {
        reject_unknown(j, {"type", "f"}, "field.");
        return ConstantForce{num("f", ConstantForce{}.f)};
    }
    if (type == "gaussian_barrier") {
        reject_unknown(j, {"type", "v0_ratio", "z_g", "d"}, "field.");
        GaussianBarrier f;
        f.v0_ratio = num("v0_ratio", f.v0_ratio);
        f.z_g = num("z_g", f.z_g);
        f.d = num("d", f.d);
        return f;
    }
    if (type == "logistic_step") {
        reject_unknown(j, {"type", "v0_ratio", "alpha", "z_l"}, "field.");
        LogisticStep f;
        f.v0_ratio = num("v0_ratio", f.v0_ratio);
        f.alpha = num("alpha", f.alpha);
        f.z_l = num("z_l", f.z_l);
        return f;
    }
    if (type == "lens") {
        reject_unknown(j, {"type", "l_x", "l_z", "z_0"}, "field.");
        LensField f;
        f.l_x = num("l_x", f.l_x);
        f.l_z = num("l_z", f.l_z);
        f.z_0 = num("z_0", f.z_0);
        return f;
    }
    fail("field.type", "unknown field '" + type + "'");
}

}  // namespace

ScenarioConfig parse_config_json(const json& j) {
    if (!j.is_object())
        throw ValidationError("config: expected a JSON object");
    reject_unknown(j,
                   {"preset", "epsilon", "n_rays", "span", "profile", "field", "mode", "dt",
                    "t_max", "z_max", "record_every", "smoothing", "caustic_min_spacing"},
                   "");

    ScenarioConfig c;
    if (j.contains("preset")) {
        const std::string name = get_string(j.at("preset"), "preset");
        const auto tag = preset_from_name(name);
        if (!tag)
            fail("preset", "unknown preset '" + name + "'");
        c = preset(*tag);
    } else {
        c = ScenarioConfig{};
        c.t_max.reset();
        c.z_max.reset();
    }

    if (j.contains("epsilon"))
        c.units = Units{get_number(j.at("epsilon"), "epsilon")};
    if (j.contains("n_rays"))
        c.n_rays = get_int(j.at("n_rays"), "n_rays");
    if (j.contains("span"))
        c.span = get_number(j.at("span"), "span");
    if (j.contains("profile"))
        c.profile = parse_profile(j.at("profile"));
    if (j.contains("field"))
        c.field = parse_field(j.at("field"));
    if (j.contains("mode")) {
        const std::string mode = get_string(j.at("mode"), "mode");
        if (mode == "exact")
            c.mode = Mode::exact;
        else if (mode == "eikonal")
            c.mode = Mode::eikonal;
        else
            fail("mode", "must be 'exact' or 'eikonal'");
    }
    if (j.contains("dt"))
        c.dt = get_number(j.at("dt"), "dt");
    if (j.contains("t_max"))
        c.t_max = get_number(j.at("t_max"), "t_max");
    if (j.contains("z_max"))
        c.z_max = get_number(j.at("z_max"), "z_max");
    if (j.contains("record_every"))
        c.record_every = get_int(j.at("record_every"), "record_every");
    if (j.contains("smoothing"))
        c.smoothing = get_int(j.at("smoothing"), "smoothing");
    if (j.contains("caustic_min_spacing"))
        c.caustic_min_spacing = get_number(j.at("caustic_min_spacing"), "caustic_min_spacing");

    validate_config(c);
    return c;
}

ScenarioConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("config file not readable: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("config parse error in " + path.string() + ": " + e.what());
    }
    return parse_config_json(j);
}

json emit_config(const ScenarioConfig& c) {
    json j;
    j["epsilon"] = c.units.epsilon;
    j["n_rays"] = c.n_rays;
    j["span"] = c.span;
    j["profile"] = std::visit(
        [](const auto& p) -> json {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GaussianProfile>)
                return {{"type", "gaussian"}};
            else
                return {{"type", "two_gaussian"}, {"offset", p.offset}};
        },
        c.profile);
    j["field"] = std::visit(
        [](const auto& f) -> json {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, FreeField>)
                return {{"type", "free"}};
            else if constexpr (std::is_same_v<T, ConstantForce>)
                return {{"type", "constant_force"}, {"f", f.f}};
            else if constexpr (std::is_same_v<T, GaussianBarrier>)
                return {{"type", "gaussian_barrier"},
                        {"v0_ratio", f.v0_ratio},
                        {"z_g", f.z_g},
                        {"d", f.d}};
            else if constexpr (std::is_same_v<T, LogisticStep>)
                return {{"type", "logistic_step"},
                        {"v0_ratio", f.v0_ratio},
                        {"alpha", f.alpha},
                        {"z_l", f.z_l}};
            else
                return {{"type", "lens"}, {"l_x", f.l_x}, {"l_z", f.l_z}, {"z_0", f.z_0}};
        },
        c.field);
    j["mode"] = c.mode == Mode::exact ? "exact" : "eikonal";
    j["dt"] = c.dt;
    if (c.t_max)
        j["t_max"] = *c.t_max;
    if (c.z_max)
        j["z_max"] = *c.z_max;
    j["record_every"] = c.record_every;
    j["smoothing"] = c.smoothing;
    j["caustic_min_spacing"] = c.caustic_min_spacing;
    return j;
}

}  // namespace waveray
