#include "reeb_orbit/function_file.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "reeb_orbit/errors.hpp"

namespace reeb_orbit {

namespace {

using json = nlohmann::json;

// SAX handler so decimal literals reach parse_rat as raw text. A DOM pass
// would round them through double first; 0.1 must become exactly 1/10.
class FileSax : public json::json_sax_t {
  public:
    FunctionFile ff;
    bool seen_grid = false, seen_class = false, seen_pert = false;

    [[noreturn]] static void fail(const std::string& msg) { throw ParseError(msg); }

    bool null() override { fail("unexpected null"); }

    bool boolean(bool val) override {
        if (ctx_ != Ctx::Flags || flag_key_.empty()) fail("unexpected boolean");
        if (flag_key_ == "auto_perturb") ff.auto_perturb = val;
        // unknown flags are ignored
        flag_key_.clear();
        return true;
    }

    bool number_integer(number_integer_t val) override { return integer(val); }

    bool number_unsigned(number_unsigned_t val) override {
        if (val > static_cast<number_unsigned_t>(std::numeric_limits<long>::max()))
            fail("integer out of range");
        return integer(static_cast<long>(val));
    }

    bool number_float(number_float_t, const string_t& raw) override {
        if (ctx_ != Ctx::PertRow) fail("unexpected fractional number");
        auto r = parse_rat(raw);
        if (!r) fail("bad numeric literal: " + raw);
        row_.push_back(*r);
        return true;
    }

    bool string(string_t& val) override {
        if (ctx_ != Ctx::PertRow) fail("unexpected string");
        auto r = parse_rat(val);
        if (!r) fail("bad rational literal: " + val);
        row_.push_back(*r);
        return true;
    }

    bool binary(binary_t&) override { fail("unexpected binary value"); }

    bool start_object(std::size_t) override {
        if (depth_ == 0) {
            depth_ = 1;
            return true;
        }
        if (depth_ == 1 && ctx_ == Ctx::Flags) {
            depth_ = 2;
            return true;
        }
        fail("unexpected object");
    }

    bool key(string_t& val) override {
        if (depth_ == 1) {
            if (val == "grid") {
                ctx_ = Ctx::Grid;
            } else if (val == "class") {
                ctx_ = Ctx::Class;
            } else if (val == "perturbation") {
                ctx_ = Ctx::Pert;
            } else if (val == "flags") {
                ctx_ = Ctx::Flags;
            } else {
                fail("unknown key: " + val);
            }
            return true;
        }
        if (depth_ == 2 && ctx_ == Ctx::Flags) {
            flag_key_ = val;
            return true;
        }
        fail("unexpected key");
    }

    bool end_object() override {
        if (depth_ == 2) {
            depth_ = 1;
            ctx_ = Ctx::None;
            return true;
        }
        depth_ = 0;
        return true;
    }

    bool start_array(std::size_t) override {
        switch (ctx_) {
            case Ctx::Grid:
            case Ctx::Class:
                if (array_depth_ != 0) fail("nested array");
                array_depth_ = 1;
                return true;
            case Ctx::Pert:
                if (array_depth_ == 0) {
                    array_depth_ = 1;  // list of rows
                    seen_pert = true;
                    return true;
                }
                if (array_depth_ == 1) {
                    array_depth_ = 2;
                    ctx_ = Ctx::PertRow;
                    row_.clear();
                    return true;
                }
                fail("perturbation nested too deep");
            default:
                fail("unexpected array");
        }
    }

    bool end_array() override {
        if (ctx_ == Ctx::PertRow) {
            ff.perturbation.push_back(row_);
            row_.clear();
            ctx_ = Ctx::Pert;
            array_depth_ = 1;
            return true;
        }
        if (ctx_ == Ctx::Grid) {
            if (ints_.size() != 2) fail("grid needs exactly two entries");
            ff.n = static_cast<int>(ints_[0]);
            ff.m = static_cast<int>(ints_[1]);
            seen_grid = true;
        } else if (ctx_ == Ctx::Class) {
            if (ints_.size() != 2) fail("class needs exactly two entries");
            ff.a = ints_[0];
            ff.b = ints_[1];
            seen_class = true;
        } else if (ctx_ == Ctx::Pert) {
            ctx_ = Ctx::None;
            array_depth_ = 0;
            return true;
        } else {
            fail("unexpected end of array");
        }
        ints_.clear();
        ctx_ = Ctx::None;
        array_depth_ = 0;
        return true;
    }

    bool parse_error(std::size_t, const std::string& token,
                     const nlohmann::detail::exception& ex) override {
        fail(std::string("malformed document near '") + token + "': " + ex.what());
    }

  private:
    enum class Ctx { None, Grid, Class, Pert, PertRow, Flags };

    bool integer(long val) {
        if (ctx_ == Ctx::Grid || ctx_ == Ctx::Class) {
            ints_.push_back(val);
            return true;
        }
        if (ctx_ == Ctx::PertRow) {
            row_.push_back(Rat(val));
            return true;
        }
        fail("unexpected number");
    }

    Ctx ctx_ = Ctx::None;
    int depth_ = 0;
    int array_depth_ = 0;
    std::vector<long> ints_;
    std::vector<Rat> row_;
    std::string flag_key_;
};

}  // namespace

FunctionFile parse_function_file(const std::string& text) {
    FileSax sax;
    json::sax_parse(text, &sax);
    if (!sax.seen_grid) throw ParseError("missing grid");
    if (!sax.seen_class) throw ParseError("missing class");
    if (!sax.seen_pert) throw ParseError("missing perturbation");
    FunctionFile& ff = sax.ff;
    if (static_cast<int>(ff.perturbation.size()) != ff.m)
        throw ParseError("perturbation needs " + std::to_string(ff.m) + " rows, got " +
                         std::to_string(ff.perturbation.size()));
    for (const auto& row : ff.perturbation)
        if (static_cast<int>(row.size()) != ff.n)
            throw ParseError("perturbation row needs " + std::to_string(ff.n) +
                             " entries, got " + std::to_string(row.size()));
    return std::move(ff);
}

FunctionFile load_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_function_file(buf.str());
}

std::string write_function_file(const FunctionFile& ff) {
    std::string out;
    out += "{\n  \"grid\": [" + std::to_string(ff.n) + ", " + std::to_string(ff.m) + "],\n";
    out += "  \"class\": [" + std::to_string(ff.a) + ", " + std::to_string(ff.b) + "],\n";
    out += "  \"perturbation\": [\n";
    for (size_t j = 0; j < ff.perturbation.size(); ++j) {
        out += "    [";
        const auto& row = ff.perturbation[j];
        for (size_t i = 0; i < row.size(); ++i) {
            out += "\"" + rat_str(row[i]) + "\"";
            if (i + 1 < row.size()) out += ", ";
        }
        out += "]";
        if (j + 1 < ff.perturbation.size()) out += ",";
        out += "\n";
    }
    out += "  ],\n";
    out += std::string("  \"flags\": { \"auto_perturb\": ") +
           (ff.auto_perturb ? "true" : "false") + " }\n}\n";
    return out;
}

CircleFunction build_from_file(const FunctionFile& ff) {
    TorusComplex cx = TorusComplex::grid(ff.n, ff.m);
    return build_function(cx, ff.a, ff.b, ff.perturbation);
}

}  // namespace reeb_orbit
