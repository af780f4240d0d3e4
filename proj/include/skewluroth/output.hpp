/*
   Copyright 2026 The skewluroth authors

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

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "engine.hpp"
#include "render.hpp"

namespace skewluroth {

/**
 * Machine-readable result document with schema-stable keys:
 * {"status", "case", "generator", "backbone_f", "certificates", "warnings"}.
 * Every command emits this shape; unused fields are null or empty.
 */
struct OutputDoc {
    std::string status;
    std::string case_name;       // empty renders as null
    std::string generator;       // empty renders as null
    std::string backbone_f;
    std::vector<Certificate> certificates;
    std::vector<std::string> warnings;

    nlohmann::json to_json() const {
        nlohmann::json certs = nlohmann::json::array();
        for (const auto& c : certificates) {
            certs.push_back({{"name", c.name},
                             {"ok", c.ok},
                             {"witness", c.witness.empty()
                                             ? nlohmann::json()
                                             : nlohmann::json(c.witness)}});
        }
        return {{"status", status},
                {"case", case_name.empty() ? nlohmann::json() : nlohmann::json(case_name)},
                {"generator",
                 generator.empty() ? nlohmann::json() : nlohmann::json(generator)},
                {"backbone_f", backbone_f},
                {"certificates", certs},
                {"warnings", warnings}};
    }

    std::string pretty() const {
        std::string out = "status: " + status + "\n";
        if (!case_name.empty()) out += "case: " + case_name + "\n";
        if (!generator.empty()) out += "generator: " + prettify(generator) + "\n";
        if (!backbone_f.empty()) out += "backbone f: " + prettify(backbone_f) + "\n";
        for (const auto& c : certificates) {
            out += std::string("  [") + (c.ok ? "ok" : "FAIL") + "] " + c.name;
            if (!c.witness.empty()) out += ": " + prettify(c.witness);
            out += "\n";
        }
        for (const auto& w : warnings) out += "warning: " + w + "\n";
        return out;
    }
};

template <class F>
OutputDoc make_doc(const LurothOutcome<F>& o) {
    OutputDoc d;
    d.status = to_string(o.status);
    if (o.branch) d.case_name = to_string(o.branch->kind);
    if (o.generator) d.generator = render(*o.generator, "T");
    d.backbone_f = render(o.backbone, "X");
    d.certificates = o.certificates;
    d.warnings = o.warnings;
    return d;
}

template <class F>
OutputDoc make_doc(const InvarianceVerdict<F>& v) {
    OutputDoc d;
    d.status = to_string(v.status);
    if (v.witness) d.generator = render(*v.witness, "T");
    d.certificates = v.certificates;
    if (!v.obstruction.empty()) d.warnings.push_back(v.obstruction);
    return d;
}

}  // namespace skewluroth
