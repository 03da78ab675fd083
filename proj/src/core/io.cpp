/*
   Copyright 2026 The lctspin Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "core/io.hpp"

#include "core/error.hpp"

namespace lctspin::io {

namespace {

Rational parse_entry(const Json& v, const std::string& where) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw Error(ErrorKind::ParseError, where + ": entries must be \"num/den\" strings");
}

RationalMatrix parse_matrix(const Json& doc, const char* key, std::size_t n) {
    if (!doc.contains(key)) return RationalMatrix(n, n);
    const Json& rows = doc.at(key);
    if (!rows.is_array()) throw Error(ErrorKind::ParseError, std::string(key) + " must be an array of rows");
    if (rows.size() != n)
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(key) + " has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& row = rows[i];
        if (!row.is_array() || row.size() != n)
            throw Error(ErrorKind::DimensionMismatch,
                        std::string(key) + " row " + std::to_string(i) + " needs " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = parse_entry(row[j], std::string(key) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    return m;
}

int parse_count(const Json& sig, const char* key) {
    if (!sig.contains(key) || !sig.at(key).is_number_integer())
        throw Error(ErrorKind::ParseError, std::string("signature.") + key + " must be an integer");
    return sig.at(key).get<int>();
}

Json exact_matrix_json(const RationalMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

lct::LctParams parse_params(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("signature") || !doc.at("signature").is_object())
        throw Error(ErrorKind::ParseError, "parameters need a \"signature\" object");
    const Json& sj = doc.at("signature");
    const lct::Signature sig(parse_count(sj, "plus"), parse_count(sj, "minus"));
    const std::size_t n = sig.dimension();
    return lct::validate_params(parse_matrix(doc, "theta", n), parse_matrix(doc, "phi", n),
                                parse_matrix(doc, "mu", n), parse_matrix(doc, "lambda", n), sig);
}

Json signature_json(const lct::Signature& sig) { return Json{{"plus", sig.plus()}, {"minus", sig.minus()}}; }

Json params_to_json(const lct::LctParams& params) {
    return Json{{"signature", signature_json(params.signature())},
                {"theta", exact_matrix_json(params.theta())},
                {"phi", exact_matrix_json(params.phi())},
                {"mu", exact_matrix_json(params.mu())},
                {"lambda", exact_matrix_json(params.lambda())}};
}

Json matrix_json(const RationalMatrix& m) { return matrix_json(to_real(m)); }

Json matrix_json(const RealMatrix& m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(format_double(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Json matrix_json(const ComplexMatrix& m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(Json::array({format_double(m(i, j).real()), format_double(m(i, j).imag())}));
        out.push_back(std::move(row));
    }
    return out;
}

Json matrix_json(const GaussianMatrix& m) { return matrix_json(to_complex(m)); }

Json generators_json(const clifford::GeneratorSet& set) {
    Json gens = Json::array();
    for (const GaussianMatrix& g : set.gens) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < g.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < g.cols(); ++j)
                row.push_back(Json::array({g(i, j).re().get_num().get_si(), g(i, j).im().get_num().get_si()}));
            rows.push_back(std::move(row));
        }
        gens.push_back(std::move(rows));
    }
    return Json{{"p", set.p}, {"q", set.q}, {"dim", set.dim}, {"metric", set.metric}, {"generators", std::move(gens)}};
}

Json bundle_json(const spin::SpinBundle& b) {
    Json out;
    out["params"] = params_to_json(b.params);
    out["convention"] = b.theta.convention ? b.theta.convention->label() : "from-X";
    out["A"] = matrix_json(b.a);
    out["g"] = matrix_json(b.g.matrix());
    out["X"] = matrix_json(b.x.mat);
    out["O"] = matrix_json(b.o);
    out["theta"] = matrix_json(b.theta.mat);
    out["S"] = matrix_json(b.s);
    out["residuals"] = Json{{"symplectic", format_double(b.symplectic_defect)},
                            {"ortho_generator", to_string(b.ortho_defect)},
                            {"pseudo_orthogonal", format_double(b.pseudo_orthogonal_defect)},
                            {"first_order_cover", to_string(b.first_order_defect)},
                            {"double_cover", format_double(b.double_cover_defect)},
                            {"det_S", format_double(b.det_s_defect)}};
    return out;
}

}  // namespace lctspin::io
