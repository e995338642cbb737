#include "phtype/tables.hpp"

#include "phtype/catalog.hpp"

#include <numeric>
#include <sstream>

namespace phtype {

TableFormat parse_table_format(const std::string& s) {
    if (s == "md") return TableFormat::MD;
    if (s == "csv") return TableFormat::CSV;
    throw std::invalid_argument("unknown table format '" + s + "' (md or csv)");
}

namespace {

std::string render(const std::string& title, const std::string& note, const std::vector<std::string>& cols,
                   const std::vector<std::string>& rows, const std::vector<std::vector<std::string>>& cells,
                   TableFormat f) {
    std::ostringstream out;
    if (f == TableFormat::CSV) {
        out << "row\\col";
        for (const auto& c : cols) out << "," << c;
        out << "\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            out << rows[i];
            for (const auto& c : cells[i]) out << "," << c;
            out << "\n";
        }
        return out.str();
    }
    out << "### " << title << "\n\n";
    if (!note.empty()) out << "> " << note << "\n\n";
    out << "| row\\col |";
    for (const auto& c : cols) out << " " << c << " |";
    out << "\n|---|";
    for (size_t i = 0; i < cols.size(); ++i) out << "---|";
    out << "\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        out << "| " << rows[i] << " |";
        for (const auto& c : cells[i]) out << " " << c << " |";
        out << "\n";
    }
    return out.str();
}

bool printed_catalog(const Algebra& a) {
    return a.provenance().kind == Provenance::Kind::BASE && is_catalog_id(a.provenance().base);
}

}  // namespace

std::string render_table(const Algebra& a, TableFormat f) {
    std::vector<int> order(a.dim_v());
    std::iota(order.begin(), order.end(), 0);
    std::string note;
    if (printed_catalog(a)) {
        order = table_order(a.provenance().base);
        note = table_note(a.provenance().base);
    }
    std::vector<std::string> labels;
    for (int i : order) labels.push_back(a.v_labels()[i]);
    std::vector<std::vector<std::string>> cells;
    for (int i : order) {
        std::vector<std::string> row;
        for (int j : order) {
            auto b = a.basis_bracket(i, j);
            row.push_back(b ? (b->second < 0 ? "-" : "") + a.z_labels()[b->first] : "0");
        }
        cells.push_back(row);
    }
    return render("Commutation relations on n_" + a.center_sig().str(), note, labels, labels, cells, f);
}

std::string render_j_table(const Algebra& a, TableFormat f) {
    auto js = j_operators(a);
    std::vector<std::string> cols, rows;
    for (int k = 0; k < a.dim_z(); ++k) cols.push_back("J" + std::to_string(k + 1));
    std::vector<std::vector<std::string>> cells;
    for (int al = 0; al < a.dim_v(); ++al) {
        rows.push_back(a.v_labels()[al]);
        std::vector<std::string> row;
        for (const auto& j : js) row.push_back((j.sign[al] < 0 ? "-" : "") + a.v_labels()[j.image[al]]);
        cells.push_back(row);
    }
    return render("J-operators on n_" + a.center_sig().str(), "", cols, rows, cells, f);
}

}  // namespace phtype
