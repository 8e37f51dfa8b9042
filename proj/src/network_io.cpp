#include "pltopo/network_io.hpp"

#include "pltopo/errors.hpp"

#include <fstream>
#include <sstream>

namespace pltopo {

using nlohmann::json;

namespace {

// SAX consumer that builds a DOM but stores floating literals as strings, so
// that 0.1 means 1/10 rather than the nearest double.
class ExactBuilder : public nlohmann::json_sax<json> {
public:
    json result;

    bool null() override { return put(json(nullptr)); }
    bool boolean(bool v) override { return put(json(v)); }
    bool number_integer(number_integer_t v) override { return put(json(v)); }
    bool number_unsigned(number_unsigned_t v) override { return put(json(v)); }
    bool number_float(number_float_t, const string_t& raw) override { return put(json(raw)); }
    bool string(string_t& v) override { return put(json(v)); }
    bool binary(binary_t&) override { return put(json(nullptr)); }

    bool start_object(std::size_t) override { return open(json::object()); }
    bool end_object() override { return close(); }
    bool start_array(std::size_t) override { return open(json::array()); }
    bool end_array() override { return close(); }
    bool key(string_t& k) override
    {
        key_ = k;
        return true;
    }

    bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& e) override
    {
        throw ParseError(ParseError::Kind::MalformedJson,
                         "malformed JSON at byte " + std::to_string(pos) + ": " + e.what());
    }

private:
    bool put(json v)
    {
        if (stack_.empty()) {
            result = std::move(v);
        } else if (stack_.back()->is_array()) {
            stack_.back()->push_back(std::move(v));
        } else {
            (*stack_.back())[key_] = std::move(v);
        }
        return true;
    }

    bool open(json v)
    {
        json* slot = nullptr;
        if (stack_.empty()) {
            result = std::move(v);
            slot = &result;
        } else if (stack_.back()->is_array()) {
            stack_.back()->push_back(std::move(v));
            slot = &stack_.back()->back();
        } else {
            slot = &((*stack_.back())[key_] = std::move(v));
        }
        stack_.push_back(slot);
        return true;
    }

    bool close()
    {
        stack_.pop_back();
        return true;
    }

    std::vector<json*> stack_;
    std::string key_;
};

[[noreturn]] void bad_field(const std::string& what)
{
    throw ParseError(ParseError::Kind::BadField, what);
}

Rational scalar(const json& v, const std::string& where)
{
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return parse_rational(v.dump());
    throw ParseError(ParseError::Kind::BadNumber, where + ": expected a number or \"p/q\" string");
}

} // namespace

json parse_exact_json(const std::string& text)
{
    ExactBuilder builder;
    json::sax_parse(text, &builder);
    return std::move(builder.result);
}

Network parse_network(const std::string& text)
{
    const json doc = parse_exact_json(text);
    if (!doc.is_object() || !doc.contains("layers") || !doc["layers"].is_array())
        bad_field("top level must be an object with a \"layers\" array");
    const json& jl = doc["layers"];
    if (jl.empty())
        bad_field("\"layers\" is empty");

    std::vector<AffineLayer> layers;
    std::size_t expected_cols = 0;
    for (std::size_t l = 0; l < jl.size(); ++l) {
        const json& j = jl[l];
        const std::string where = "layer " + std::to_string(l);
        if (!j.is_object() || !j.contains("weights") || !j.contains("bias"))
            bad_field(where + " needs \"weights\" and \"bias\"");
        if (!j["weights"].is_array() || !j["bias"].is_array())
            bad_field(where + ": \"weights\" and \"bias\" must be arrays");
        AffineLayer layer;
        const bool last = l + 1 == jl.size();
        if (j.contains("activation")) {
            if (!j["activation"].is_string())
                bad_field(where + ": \"activation\" must be a string");
            const std::string act = j["activation"].get<std::string>();
            if (act == "relu")
                layer.activation = Activation::Relu;
            else if (act == "none")
                layer.activation = Activation::None;
            else
                bad_field(where + ": unknown activation '" + act + "'");
        } else {
            layer.activation = last ? Activation::None : Activation::Relu;
        }
        if (layer.activation != (last ? Activation::None : Activation::Relu))
            throw ParseError(ParseError::Kind::Shape,
                             where + (last ? ": final layer must have activation none"
                                           : ": hidden layers must have activation relu"));

        const json& rows = j["weights"];
        if (rows.empty())
            throw ParseError(ParseError::Kind::Shape, where + " has no rows");
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::string rw = where + " row " + std::to_string(r);
            if (!rows[r].is_array())
                bad_field(rw + " is not an array");
            if (r == 0 && l == 0)
                expected_cols = rows[r].size();
            if (rows[r].size() != expected_cols || expected_cols == 0)
                throw ParseError(ParseError::Kind::Shape, rw + " has length " + std::to_string(rows[r].size())
                                                               + ", expected " + std::to_string(expected_cols));
            Vec row;
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                row.push_back(scalar(rows[r][c], rw + " column " + std::to_string(c)));
            layer.weights.push_back(std::move(row));
        }
        const json& bias = j["bias"];
        if (bias.size() != rows.size())
            throw ParseError(ParseError::Kind::Shape, where + " bias has length " + std::to_string(bias.size())
                                                          + ", expected " + std::to_string(rows.size()));
        for (std::size_t r = 0; r < bias.size(); ++r)
            layer.bias.push_back(scalar(bias[r], where + " bias " + std::to_string(r)));
        expected_cols = rows.size();
        layers.push_back(std::move(layer));
    }
    if (layers.back().outputs() != 1)
        throw ParseError(ParseError::Kind::Shape, "final layer must have exactly one output");
    return Network(std::move(layers));
}

Network load_network(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_network(ss.str());
}

json network_to_json(const Network& net)
{
    json layers = json::array();
    for (const auto& layer : net.layers()) {
        json w = json::array();
        for (const auto& row : layer.weights) {
            json jr = json::array();
            for (const auto& x : row)
                jr.push_back(to_string(x));
            w.push_back(std::move(jr));
        }
        json b = json::array();
        for (const auto& x : layer.bias)
            b.push_back(to_string(x));
        layers.push_back({{"weights", std::move(w)},
                          {"bias", std::move(b)},
                          {"activation", layer.activation == Activation::Relu ? "relu" : "none"}});
    }
    return {{"layers", std::move(layers)}};
}

void save_network(const Network& net, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path);
    out << network_to_json(net).dump(2) << '\n';
}

} // namespace pltopo
