"""Synthetic 100-pair corpus and reference MESIA values for
tests/mesia_oracle.rs.

Signature words come straight from the generator (no parsing), identifiers
are split with a separate implementation of the camel/snake rules, and stems
come from NLTK's Porter stemmer.

    python3 mesia_oracle.py
"""
import json
import math
import random

from nltk.stem.porter import PorterStemmer

PS = PorterStemmer(mode=PorterStemmer.MARTIN_EXTENSIONS)
STOPS = {
    l.strip()
    for l in open("../../data/stopwords_en.txt")
    if l.strip() and not l.startswith("#")
}

VERBS = ["get", "set", "remove", "add", "mark", "read", "write", "parse", "find", "update"]
NOUNS = ["entry", "value", "listener", "file", "name", "time", "key", "user", "node", "buffer"]
ACRONYMS = ["URL", "IDs", "HTML", "IO", "CSV"]
TYPES = ["String", "int", "List<Entry>", "Map<String,Integer>", "long", "Node[]", "boolean"]
FILLER = ["the", "a", "of", "to", "in", "by", "its", "specified", "current", "given",
          "returns", "entries", "values", "listeners", "nanoseconds", "used", "setting",
          "ids", "url", "html", "new", "all", "this", "method", "instance", "last"]


def split_ident(ident):
    parts = []
    for seg in "".join(c if c.isalnum() else " " for c in ident).split():
        cur = ""
        for i, ch in enumerate(seg):
            if i > 0:
                prev = seg[i - 1]
                nxt = seg[i + 1] if i + 1 < len(seg) else ""
                after = seg[i + 2] if i + 2 < len(seg) else ""
                cut = False
                if prev.isdigit() != ch.isdigit():
                    cut = True
                elif ch.isupper() and not prev.isupper() and not prev.isdigit():
                    cut = True
                elif prev.isupper() and ch.isupper() and nxt.islower():
                    plural = nxt == "s" and not after.islower()
                    cut = not plural
                if cut:
                    parts.append(cur)
                    cur = ""
            cur += ch.lower()
        parts.append(cur)
    return parts


def base_type(t):
    return t.split("<")[0].split("[")[0]


def tokenize(comment):
    out = []
    for raw in comment.replace("-", " ").split():
        i, j = 0, len(raw)
        while i < j and not raw[i].isalnum():
            i += 1
        while j > i and not raw[j - 1].isalnum():
            j -= 1
        if i < j:
            out.append(raw[i:j].lower())
    return out


def stem(w):
    return w if len(w) <= 2 else PS.stem(w)


def main():
    rng = random.Random(7)
    pairs = []
    for i in range(100):
        verb = rng.choice(VERBS)
        noun = rng.choice(NOUNS + ACRONYMS)
        noun = noun if noun.isupper() or noun == "IDs" else noun.capitalize()
        if i % 4 == 3:
            name = f"{verb}_{noun.lower()}"
        else:
            name = verb + noun
        nparams = rng.randint(0, 2)
        params = [(rng.choice(TYPES), rng.choice(NOUNS) + ("Count" if rng.random() < 0.3 else ""))
                  for _ in range(nparams)]
        ret = rng.choice(TYPES + ["void", "void"])
        code = f"public {ret} {name}({', '.join(f'{t} {n}' for t, n in params)}) {{ return; }}"
        words = [rng.choice(FILLER + [verb + "s", noun.lower(), rng.choice(NOUNS)])
                 for _ in range(rng.randint(1, 14))]
        comment = " ".join(words).capitalize() + rng.choice([".", "", " -- see docs.", "!"])
        sig_idents = [name] + [n for _, n in params] + [base_type(t) for t, _ in params]
        if ret != "void":
            sig_idents.append(base_type(ret))
        pairs.append({"id": f"s{i:03d}", "code": code, "comment": comment, "sig": sig_idents})

    tokenized = []
    freq = {}
    for p in pairs:
        surface = tokenize(p["comment"])
        stems = [stem(w) for w in surface]
        sig = {stem(part) for ident in p["sig"] for part in split_ident(ident)}
        tokenized.append((p["id"], surface, stems, sig))
        for s in stems:
            freq[s] = freq.get(s, 0) + 1
    total = sum(freq.values())

    expected = {}
    hist = [0] * 11
    for pid, surface, stems, sig in tokenized:
        uncond = sum(-math.log2(freq[s] / total) for s in stems)
        cond = sum(-math.log2(freq[s] / total) for s in stems if s not in sig)
        remaining = sum(1 for w, s in zip(surface, stems) if w not in STOPS and s not in sig)
        mesia = cond / len(stems)
        expected[pid] = {
            "info_total": cond,
            "info_unconditioned": uncond,
            "mesia": mesia,
            "raw_comment_len": len(stems),
            "remaining_count": remaining,
        }
        hist[0 if mesia <= 1 else 10 if mesia > 10 else math.ceil(mesia) - 1] += 1

    with open("synthetic_pairs.jsonl", "w") as f:
        for p in pairs:
            f.write(json.dumps({"id": p["id"], "code": p["code"], "comment": p["comment"]}) + "\n")
    with open("synthetic_expected.json", "w") as f:
        json.dump({"total": total, "vocab_size": len(freq), "histogram": hist, "scores": expected},
                  f, indent=1, sort_keys=True)
        f.write("\n")
    print(total, len(freq), hist)


if __name__ == "__main__":
    main()
