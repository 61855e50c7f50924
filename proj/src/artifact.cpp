#include "mrlocal/artifact.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mrlocal {
namespace {

json field_to_json(const FieldRef& f) {
    return json{{"p", f->characteristic()}, {"m", f->degree()}, {"modulus", f->modulus()}};
}

FieldRef field_from_json(const json& j) {
    return FieldSpec::make(j.at("p").get<uint32_t>(), j.at("m").get<uint32_t>(),
                           j.at("modulus").get<std::vector<uint32_t>>());
}

json element_to_json(const FieldElement& e) { return json(e.coeffs()); }

FieldElement element_from_json(const FieldRef& f, const json& j) {
    return f->from_coeffs(j.get<std::vector<uint32_t>>());
}

json elements_to_json(const std::vector<FieldElement>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(element_to_json(e));
    return out;
}

std::vector<FieldElement> elements_from_json(const FieldRef& f, const json& j) {
    std::vector<FieldElement> out;
    for (const auto& e : j) out.push_back(element_from_json(f, e));
    return out;
}

json matrix_to_json(const FMatrix& m) {
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

FMatrix matrix_from_json(const FieldRef& f, const json& j) {
    FMatrix m(j.size(), j.at(0).size(), f);
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = element_from_json(f, j.at(r).at(c));
    return m;
}

uint64_t fnv1a(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hash_hex(uint64_t h) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

json semantic_json(const CodeInstance& inst) {
    const LocalCodeParams& p = inst.params;
    json doc;
    doc["format_version"] = 1;
    doc["construction"] = construction_name(inst.construction);
    doc["guarantee"] = inst.guarantee == Guarantee::MR ? "mr" : "sd";
    doc["params"] = {{"k", p.k}, {"r", p.r}, {"h", p.h}, {"g", p.g}, {"n", p.n}};
    doc["field"] = field_to_json(inst.field);

    json layout;
    if (const auto* lin = std::get_if<LinearizedLayout>(&inst.layout)) {
        layout["base_field"] = field_to_json(lin->base);
        layout["exponents"] = lin->exponents;
        layout["leading_one"] = lin->leading_one;
    } else if (const auto* sd = std::get_if<SdH3Layout>(&inst.layout)) {
        layout["prefix_field"] = field_to_json(sd->prefix_field);
        layout["suffix_field"] = field_to_json(sd->suffix_field);
        layout["t"] = sd->t;
        layout["prefix_set"] = elements_to_json(sd->prefix_set);
        layout["subfield_set"] = elements_to_json(sd->subfield_set);
        layout["coset_reps"] = elements_to_json(sd->coset_reps);
    } else if (const auto* vd = std::get_if<VandermondeLayout>(&inst.layout)) {
        layout["subfield_degree"] = vd->subfield_degree;
        layout["t"] = vd->t;
        layout["improved"] = vd->improved;
        layout["basis_gen"] = element_to_json(vd->basis_gen);
        layout["constraint"] = matrix_to_json(vd->constraint);
        json kernel = json::array();
        for (const auto& u : vd->kernel) kernel.push_back(elements_to_json(u));
        layout["kernel"] = kernel;
    }
    doc["layout"] = layout;

    json points = json::array();
    for (const auto& row : inst.points) points.push_back(elements_to_json(row));
    doc["points"] = points;
    doc["parity"] = matrix_to_json(inst.parity);
    return doc;
}

}  // namespace

uint64_t artifact_hash(const CodeInstance& inst) {
    return fnv1a(semantic_json(inst).dump());
}

json instance_to_json(const CodeInstance& inst) {
    json doc = semantic_json(inst);
    doc["hash"] = hash_hex(fnv1a(doc.dump()));
    return doc;
}

CodeInstance instance_from_json(const json& doc) {
    CodeInstance inst;
    inst.construction = construction_from_name(doc.at("construction").get<std::string>());
    std::string guar = doc.at("guarantee").get<std::string>();
    if (guar != "mr" && guar != "sd") throw std::runtime_error("unknown guarantee tag");
    inst.guarantee = guar == "mr" ? Guarantee::MR : Guarantee::SD;

    const json& pj = doc.at("params");
    inst.params = LocalCodeParams::from_krh(pj.at("k").get<uint32_t>(),
                                            pj.at("r").get<uint32_t>(),
                                            pj.at("h").get<uint32_t>());
    if (inst.params.g != pj.at("g").get<uint32_t>() ||
        inst.params.n != pj.at("n").get<uint32_t>())
        throw std::runtime_error("artifact params are internally inconsistent");

    inst.field = field_from_json(doc.at("field"));

    const json& lj = doc.at("layout");
    switch (inst.construction) {
        case Construction::Linearized: {
            LinearizedLayout lay;
            lay.base = field_from_json(lj.at("base_field"));
            lay.exponents = lj.at("exponents").get<std::vector<uint32_t>>();
            lay.leading_one = lj.at("leading_one").get<bool>();
            inst.layout = std::move(lay);
            break;
        }
        case Construction::SdH3: {
            SdH3Layout lay;
            lay.prefix_field = field_from_json(lj.at("prefix_field"));
            lay.suffix_field = field_from_json(lj.at("suffix_field"));
            lay.t = lj.at("t").get<uint32_t>();
            lay.prefix_set = elements_from_json(lay.prefix_field, lj.at("prefix_set"));
            lay.subfield_set = elements_from_json(lay.suffix_field, lj.at("subfield_set"));
            lay.coset_reps = elements_from_json(lay.suffix_field, lj.at("coset_reps"));
            inst.layout = std::move(lay);
            break;
        }
        case Construction::VandermondeGeneral:
        case Construction::VandermondeImproved: {
            VandermondeLayout lay;
            lay.subfield_degree = lj.at("subfield_degree").get<uint32_t>();
            lay.t = lj.at("t").get<uint32_t>();
            lay.improved = lj.at("improved").get<bool>();
            lay.basis_gen = element_from_json(inst.field, lj.at("basis_gen"));
            lay.constraint = matrix_from_json(inst.field, lj.at("constraint"));
            for (const auto& u : lj.at("kernel"))
                lay.kernel.push_back(elements_from_json(inst.field, u));
            inst.layout = std::move(lay);
            break;
        }
    }

    for (const auto& row : doc.at("points"))
        inst.points.push_back(elements_from_json(inst.field, row));
    inst.parity = matrix_from_json(inst.field, doc.at("parity"));

    std::string declared = doc.at("hash").get<std::string>();
    if (declared != hash_hex(artifact_hash(inst)))
        throw std::runtime_error("artifact hash mismatch; file is corrupt or was edited");
    return inst;
}

std::string render_artifact(const CodeInstance& inst) {
    return instance_to_json(inst).dump(2) + "\n";
}

void save_artifact(const std::string& path, const CodeInstance& inst) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open artifact file for writing: " + path);
    out << render_artifact(inst);
}

CodeInstance load_artifact(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open artifact file: " + path);
    json doc = json::parse(in);
    return instance_from_json(doc);
}

FMatrix rebuild_parity(const CodeInstance& inst) {
    const LocalCodeParams& p = inst.params;
    if (const auto* vd = std::get_if<VandermondeLayout>(&inst.layout)) {
        uint32_t depth = p.h + p.g - vd->t;
        return assemble_parity(p, inst.points, inst.field,
                               [&](uint32_t i, uint32_t j, uint32_t b0) {
                                   const FieldElement& x = inst.points[i][j];
                                   uint32_t b = b0 + 1;
                                   if (b <= vd->t - 1) return x.pow(b);
                                   const auto& u = vd->kernel[b - vd->t];
                                   FieldElement acc = inst.field->zero();
                                   for (uint32_t d = 0; d < depth; ++d)
                                       acc = acc + u[d] * x.pow(vd->t + d);
                                   return acc;
                               });
    }
    // linearized and sd-h3 share the 2^(b-1) exponent ladder
    return assemble_parity(p, inst.points, inst.field,
                           [&](uint32_t i, uint32_t j, uint32_t b0) {
                               return inst.points[i][j].pow(uint64_t{1} << b0);
                           });
}

}  // namespace mrlocal
