"""Word lists backing the rule-based tagging backend.

Small and curated on purpose: the backend is deterministic and offline.
Unknown words fall through to suffix and casing rules.
"""

import importlib.resources

STOPWORD_LIST_VERSION = "1"


def load_stopwords():
    text = (importlib.resources.files("annotator") / "data" / "stopwords.txt"
            ).read_text(encoding="utf-8")
    return frozenset(line.strip() for line in text.splitlines()
                     if line.strip() and not line.startswith("#"))


DETERMINERS = frozenset({
    "a", "an", "the", "this", "that", "these", "those", "some", "any",
    "each", "every", "no", "another",
})

PREPOSITIONS = frozenset({
    "about", "above", "across", "after", "against", "along", "amid",
    "among", "around", "at", "before", "behind", "below", "beneath",
    "beside", "between", "beyond", "by", "despite", "during", "for",
    "from", "in", "inside", "into", "near", "of", "off", "on", "onto",
    "outside", "over", "past", "since", "through", "throughout", "toward",
    "towards", "under", "until", "upon", "via", "with", "within", "without",
})

CONJUNCTIONS = frozenset({"and", "or", "but", "nor", "yet"})

PRONOUNS = frozenset({
    "i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us",
    "them", "his", "hers", "its", "their", "theirs", "my", "your", "our",
    "who", "whom", "which", "what", "himself", "herself", "itself",
    "themselves",
})

AUXILIARIES = frozenset({
    "is", "am", "are", "was", "were", "be", "been", "being", "do", "does",
    "did", "have", "has", "had", "will", "would", "shall", "should", "can",
    "could", "may", "might", "must",
})

# frequent verbs whose forms the suffix rules miss (irregulars and bases)
VERBS = frozenset({
    "say", "says", "said", "see", "saw", "seen", "go", "goes", "went",
    "gone", "make", "makes", "made", "take", "takes", "took", "taken",
    "come", "comes", "came", "get", "gets", "got", "gotten", "give",
    "gives", "gave", "given", "find", "finds", "found", "think", "thinks",
    "thought", "tell", "tells", "told", "become", "becomes", "became",
    "show", "shows", "shown", "leave", "leaves", "left", "feel", "feels",
    "felt", "put", "puts", "set", "sets", "keep", "keeps", "kept", "let",
    "lets", "begin", "begins", "began", "begun", "run", "runs", "ran",
    "sit", "sits", "sat", "stand", "stands", "stood", "win", "wins", "won",
    "lose", "loses", "lost", "pay", "pays", "paid", "meet", "meets", "met",
    "strike", "strikes", "struck", "hit", "hits", "hold", "holds", "held",
    "lead", "leads", "led", "grow", "grows", "grew", "grown", "fall",
    "falls", "fell", "fallen", "send", "sends", "sent", "build", "builds",
    "built", "break", "breaks", "broke", "broken", "spend", "spends",
    "spent", "buy", "buys", "bought", "catch", "catches", "caught",
    "choose", "chooses", "chose", "chosen", "fight", "fights", "fought",
    "sell", "sells", "sold", "write", "writes", "wrote", "written", "read",
    "reads", "speak", "speaks", "spoke", "spoken", "know", "knows", "knew",
    "known", "score", "scores", "report", "reports", "arrest", "arrests",
    "visit", "visits", "praise", "praises", "announce", "announces",
    "flee", "flees", "fled", "die", "dies", "died", "kill", "kills",
})

ADJECTIVES = frozenset({
    "big", "small", "large", "little", "old", "young", "new", "good",
    "bad", "high", "low", "long", "short", "strong", "weak", "severe",
    "major", "minor", "early", "late", "local", "national", "public",
    "several", "many", "much", "few", "first", "second", "third", "last",
    "next", "other", "same", "different", "important", "serious", "dead",
    "main", "former", "top",
})

ADVERBS = frozenset({
    "quickly", "slowly", "very", "too", "also", "again", "soon", "often",
    "never", "always", "yesterday", "today", "tomorrow", "here", "there",
    "now", "then", "later", "earlier", "recently", "almost", "already",
    "however", "still", "yet", "ago",
})

# frequent common nouns so sentence-initial capitalized words do not all
# become proper nouns
NOUNS = frozenset({
    "police", "officer", "officers", "man", "men", "woman", "women",
    "people", "person", "child", "children", "city", "country", "state",
    "government", "president", "minister", "court", "judge", "reporter",
    "reporters", "journalist", "news", "report", "storm", "flood", "fire",
    "earthquake", "war", "attack", "bomb", "suspect", "suspects", "victim",
    "victims", "arrest", "arrests", "goal", "goals", "game", "team",
    "player", "players", "season", "year", "years", "month", "months",
    "week", "weeks", "day", "days", "time", "response", "company",
    "companies", "group", "groups", "official", "officials", "spokesman",
    "leader", "leaders", "home", "house", "school", "hospital", "water",
    "area", "region", "world", "number", "part", "way", "death", "deaths",
    "dog", "cat", "summary", "summaries",
})

NUMBER_WORDS = frozenset({
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve", "twenty", "thirty", "forty",
    "fifty", "sixty", "seventy", "eighty", "ninety", "hundred", "thousand",
    "million", "billion", "dozen",
})

PERSON_NAMES = frozenset({
    "john", "mary", "james", "robert", "michael", "william", "david",
    "richard", "joseph", "thomas", "charles", "sarah", "karen", "nancy",
    "lisa", "betty", "margaret", "sandra", "ashley", "kimberly", "emily",
    "donna", "michelle", "smith", "johnson", "williams", "brown", "jones",
    "garcia", "miller", "davis", "clinton", "bush", "obama", "reese",
    "kyle", "casey", "jordan", "taylor", "morgan", "alex",
})

LOCATIONS = frozenset({
    "america", "england", "france", "germany", "china", "japan", "india",
    "russia", "brazil", "canada", "mexico", "spain", "italy", "egypt",
    "iraq", "iran", "israel", "turkey", "london", "paris", "berlin",
    "madrid", "rome", "moscow", "beijing", "tokyo", "delhi", "cairo",
    "baghdad", "washington", "boston", "chicago", "texas", "california",
    "york", "angeles", "francisco", "europe", "asia", "africa",
})

ORGANIZATIONS = frozenset({
    "un", "u.n.", "nato", "fbi", "cia", "nasa", "who", "unesco",
    "interpol", "congress", "senate", "parliament", "pentagon", "acme",
    "google", "microsoft", "apple", "amazon", "reuters", "bbc", "cnn",
})

ORG_SUFFIXES = frozenset({"inc", "inc.", "corp", "corp.", "ltd", "ltd.",
                          "co", "co.", "llc", "group", "agency",
                          "university", "committee", "ministry",
                          "department", "bank"})

MONTHS_AND_DAYS = frozenset({
    "january", "february", "march", "april", "may", "june", "july",
    "august", "september", "october", "november", "december", "monday",
    "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday",
})
