#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hwzeta::cli {

enum class Format { text, tsv };

/// Ordered (section, key, value) rows. Both renderings carry exactly the same rows.
class Report {
public:
    void add(std::string section, std::string key, std::string value) {
        rows_.push_back({std::move(section), std::move(key), std::move(value)});
    }

    struct Row {
        std::string section;
        std::string key;
        std::string value;
    };

    const std::vector<Row>& rows() const noexcept { return rows_; }

    void render(std::ostream& os, Format f) const {
        if (f == Format::tsv) {
            for (const auto& r : rows_) os << r.section << '\t' << r.key << '\t' << r.value << '\n';
            return;
        }
        const std::string* current = nullptr;
        for (const auto& r : rows_) {
            if (!current || *current != r.section) {
                if (current) os << '\n';
                os << "== " << r.section << " ==\n";
                current = &r.section;
            }
            os << r.key << ' ' << r.value << '\n';
        }
    }

private:
    std::vector<Row> rows_;
};

}  // namespace hwzeta::cli
