#include "tsgen/design_file.hpp"

#include <sstream>

#include "json.hpp"

namespace tsgen {

using ordered_json = nlohmann::ordered_json;

DesignFile design_file_of(const Assembly& assembly, const ArcColoring& coloring) {
    DesignFile file;
    file.n = assembly.design.n;
    file.lambda = assembly.design.lambda;
    file.seeded = coloring.is_seeded();
    file.seed = file.seeded ? coloring.seed() : 0;
    file.blocks = assembly.design.blocks;
    file.origins = assembly.design.origins;
    file.gray_code = assembly.order;
    return file;
}

std::string design_to_json(const DesignFile& file) {
    int v = 2 * file.n + 2;
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["n"] = file.n;
    doc["v"] = v;
    doc["lambda"] = file.lambda;
    ordered_json coloring;
    coloring["mode"] = file.seeded ? "seeded" : "default";
    if (file.seeded) coloring["seed"] = file.seed;
    doc["coloring"] = coloring;
    ordered_json points = ordered_json::array();
    for (int p = 0; p < v; ++p) points.push_back(point_name(static_cast<Point>(p)));
    doc["points"] = points;
    ordered_json blocks = ordered_json::array();
    for (const Block& b : file.blocks)
        blocks.push_back({point_name(b[0]), point_name(b[1]), point_name(b[2])});
    doc["blocks"] = blocks;
    ordered_json origins = ordered_json::array();
    for (const BlockOrigin& o : file.origins) {
        ordered_json entry;
        entry["step"] = step_name(o.step);
        entry["class"] = o.cls;
        origins.push_back(entry);
    }
    doc["origins"] = origins;
    doc["gray_code"] = file.gray_code;
    return doc.dump(2) + "\n";
}

DesignFile design_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParams(std::string("design file: not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("schema_version").get<int>() != 1)
            throw InvalidParams("design file: unsupported schema_version");
        DesignFile file;
        file.n = doc.at("n").get<int>();
        require_valid_n(file.n);
        file.lambda = doc.at("lambda").get<int>();
        require_valid_lambda(file.n, file.lambda);
        int v = 2 * file.n + 2;
        if (doc.at("v").get<int>() != v)
            throw InvalidParams("design file: v does not match n");

        const auto& coloring = doc.at("coloring");
        std::string mode = coloring.at("mode").get<std::string>();
        if (mode == "seeded") {
            file.seeded = true;
            file.seed = coloring.at("seed").get<std::uint64_t>();
        } else if (mode == "default") {
            file.seeded = false;
        } else {
            throw InvalidParams("design file: unknown coloring mode");
        }

        const auto& points = doc.at("points");
        if (static_cast<int>(points.size()) != v)
            throw InvalidParams("design file: wrong number of points");
        for (int p = 0; p < v; ++p)
            if (points[p].get<std::string>() != point_name(static_cast<Point>(p)))
                throw InvalidParams("design file: points not in canonical order");

        for (const auto& entry : doc.at("blocks")) {
            if (entry.size() != 3)
                throw InvalidParams("design file: block is not a triple");
            file.blocks.push_back(make_block(
                parse_point(entry[0].get<std::string>(), file.n),
                parse_point(entry[1].get<std::string>(), file.n),
                parse_point(entry[2].get<std::string>(), file.n)));
        }

        int t = file.lambda / 2;
        for (const auto& entry : doc.at("origins")) {
            BlockOrigin origin;
            origin.step = parse_step(entry.at("step").get<std::string>());
            origin.cls = entry.at("class").get<int>();
            if (origin.cls < 0 || origin.cls >= t)
                throw InvalidParams("design file: origin class out of range");
            file.origins.push_back(origin);
        }
        if (file.origins.size() != file.blocks.size())
            throw InvalidParams("design file: origins do not match blocks");

        for (const auto& entry : doc.at("gray_code")) {
            std::size_t idx = entry.get<std::size_t>();
            if (idx >= file.blocks.size())
                throw InvalidParams("design file: gray_code index out of range");
            file.gray_code.push_back(idx);
        }
        return file;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParams(std::string("design file: missing or mistyped field: ") +
                            e.what());
    }
}

std::string design_to_text(const DesignFile& file) {
    std::ostringstream out;
    out << "triple system n=" << file.n << " v=" << 2 * file.n + 2
        << " lambda=" << file.lambda;
    if (file.seeded)
        out << " coloring=seeded seed=" << file.seed;
    else
        out << " coloring=default";
    out << "\n";
    for (std::size_t i = 0; i < file.blocks.size(); ++i) {
        const Block& b = file.blocks[i];
        out << i << ": " << point_name(b[0]) << " " << point_name(b[1]) << " "
            << point_name(b[2]);
        if (i < file.origins.size())
            out << "  [" << step_name(file.origins[i].step) << " class "
                << file.origins[i].cls << "]";
        out << "\n";
    }
    out << "gray_code:";
    for (std::size_t idx : file.gray_code) out << " " << idx;
    out << "\n";
    return out.str();
}

} // namespace tsgen
