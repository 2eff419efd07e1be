"""Hand-tagged sentence fixtures for the hypernymy pattern suite.

Each case is (pattern name, sentence, expected pairs).  A sentence is a
space-separated sequence of word/lemma/tag triples; expected pairs are
(superordinate lemma, hyponym lemma) tuples the pattern must extract
from that sentence alone.  An empty set marks a negative control.
"""

from termflex.corpus import DomainCorpus, Sentence, TaggedToken


def parse_sentence(text):
    tokens = []
    for triple in text.split():
        word, lemma, tag = triple.split("/")
        tokens.append(TaggedToken(word, lemma.lower(), tag))
    return tokens


def case_corpus(text, domain="FIX"):
    return DomainCorpus(domain, [Sentence(0, tuple(parse_sentence(text)))])


CASES = [
    # -- hyper01: X is a kind/type/example/class/group of Y ----------------
    ("hyper01",
     "Corn/corn/NN is/be/VBZ an/an/DT example/example/NN of/of/IN a/a/DT "
     "monoecious/monoecious/JJ plant/plant/NN ././SENT",
     {("plant", "corn")}),
    ("hyper01",
     "Terpenes/terpene/NNS are/be/VBP a/a/DT class/class/NN of/of/IN "
     "hydrocarbons/hydrocarbon/NNS ././SENT",
     {("hydrocarbon", "terpene")}),
    ("hyper01",
     "Lipids/lipid/NNS are/be/VBP a/a/DT group/group/NN of/of/IN "
     "organic/organic/JJ compounds/compound/NNS ././SENT",
     {("compound", "lipid")}),
    ("hyper01",
     "Smog/smog/NN is/be/VBZ a/a/DT kind/kind/NN of/of/IN "
     "pollution/pollution/NN ././SENT",
     {("pollution", "smog")}),
    ("hyper01",
     "Granite/granite/NN is/be/VBZ a/a/DT type/type/NN of/of/IN "
     "igneous/igneous/JJ rock/rock/NN ././SENT",
     {("rock", "granite")}),
    ("hyper01",
     "Ethanol/ethanol/NN is/be/VBZ a/a/DT type/type/NN of/of/IN "
     "renewable/renewable/JJ fuel/fuel/NN ././SENT",
     {("fuel", "ethanol")}),
    ("hyper01",
     "The/the/DT water/water/NN is/be/VBZ clean/clean/JJ ././SENT",
     set()),

    # -- hyper02: types of X include/are Y ---------------------------------
    ("hyper02",
     "Another/another/DT class/class/NN of/of/IN "
     "phytohormones/phytohormone/NNS is/be/VBZ the/the/DT "
     "jasmonates/jasmonate/NNS ././SENT",
     {("phytohormone", "jasmonate")}),
    ("hyper02",
     "The/the/DT two/two/CD most/most/RBS common/common/JJ types/type/NNS "
     "of/of/IN folds/fold/NNS are/be/VBP anticlines/anticline/NNS "
     "and/and/CC synclines/syncline/NNS ././SENT",
     {("fold", "anticline"), ("fold", "syncline")}),
    ("hyper02",
     "Examples/example/NNS of/of/IN toxic/toxic/JJ "
     "substances/substance/NNS include/include/VBP rubber/rubber/NN ,/,/, "
     "plastic/plastic/NN and/and/CC glass/glass/NN ././SENT",
     {("substance", "rubber"), ("substance", "plastic"),
      ("substance", "glass")}),
    ("hyper02",
     "One/one/CD type/type/NN of/of/IN toponym/toponym/NN is/be/VBZ "
     "the/the/DT hydronym/hydronym/NN ././SENT",
     {("toponym", "hydronym")}),
    ("hyper02",
     "Types/type/NNS of/of/IN waste/waste/NN include/include/VBP "
     "sludge/sludge/NN and/and/CC ash/ash/NN ././SENT",
     {("waste", "sludge"), ("waste", "ash")}),
    ("hyper02",
     "A/a/DT group/group/NN of/of/IN tourists/tourist/NNS "
     "arrived/arrive/VBD ././SENT",
     set()),

    # -- hyper03: Y such as X ----------------------------------------------
    ("hyper03",
     "Heavy/heavy/JJ metals/metal/NNS such/such/JJ as/as/IN lead/lead/NN "
     ",/,/, cadmium/cadmium/NN and/and/CC copper/copper/NN are/be/VBP "
     "toxic/toxic/JJ ././SENT",
     {("metal", "lead"), ("metal", "cadmium"), ("metal", "copper")}),
    ("hyper03",
     "Human/human/JJ activities/activity/NNS such/such/JJ as/as/IN "
     "agriculture/agriculture/NN have/have/VBP altered/alter/VBN "
     "the/the/DT landscape/landscape/NN ././SENT",
     {("activity", "agriculture")}),
    ("hyper03",
     "Staple/staple/JJ foods/food/NNS such/such/JJ as/as/IN "
     "barley/barley/NN ,/,/, cassava/cassava/NN ,/,/, corn/corn/NN "
     "and/and/CC rice/rice/NN feed/feed/VBP billions/billion/NNS ././SENT",
     {("food", "barley"), ("food", "cassava"), ("food", "corn"),
      ("food", "rice")}),
    ("hyper03",
     "Cancers/cancer/NNS such/such/JJ as/as/IN leukemia/leukemia/NN "
     "may/may/MD develop/develop/VBD later/later/RB ././SENT",
     {("cancer", "leukemia")}),
    ("hyper03",
     "Micronutrients/micronutrient/NNS such/such/JJ as/as/IN "
     "vitamins/vitamin/NNS and/and/CC minerals/mineral/NNS "
     "support/support/VBP growth/growth/NN ././SENT",
     {("micronutrient", "vitamin"), ("micronutrient", "mineral")}),
    ("hyper03",
     "The/the/DT results/result/NNS were/be/VBD such/such/JJ "
     "that/that/IN everyone/everyone/NN agreed/agree/VBD ././SENT",
     set()),

    # -- hyper04: Y including X --------------------------------------------
    ("hyper04",
     "The/the/DT area/area/NN supports/support/VBZ desert/desert/JJ "
     "plants/plant/NNS ,/,/, including/including/VBG yucca/yucca/NN "
     "and/and/CC cacti/cactus/NNS ././SENT",
     {("plant", "yucca"), ("plant", "cactus")}),
    ("hyper04",
     "Pesticides/pesticide/NNS ,/,/, including/including/VBG "
     "insecticides/insecticide/NNS and/and/CC herbicides/herbicide/NNS "
     ",/,/, are/be/VBP widely/widely/RB used/use/VBN ././SENT",
     {("pesticide", "insecticide"), ("pesticide", "herbicide")}),
    ("hyper04",
     "Trace/trace/JJ elements/element/NNS including/including/VBG "
     "titanium/titanium/NN and/and/CC manganese/manganese/NN "
     "occur/occur/VBP in/in/IN coal/coal/NN ././SENT",
     {("element", "titanium"), ("element", "manganese")}),
    ("hyper04",
     "The/the/DT report/report/NN was/be/VBD thorough/thorough/JJ ,/,/, "
     "including/including/VBG every/every/DT detail/detail/NN ././SENT",
     set()),

    # -- hyper05: X and other Y --------------------------------------------
    ("hyper05",
     "Insects/insect/NNS and/and/CC other/other/JJ animals/animal/NNS "
     "eat/eat/VBP the/the/DT plants/plant/NNS ././SENT",
     {("animal", "insect")}),
    ("hyper05",
     "The/the/DT sextant/sextant/NN ,/,/, the/the/DT compass/compass/NN "
     "and/and/CC other/other/JJ devices/device/NNS aid/aid/VBP "
     "navigation/navigation/NN ././SENT",
     {("device", "sextant"), ("device", "compass")}),
    ("hyper05",
     "Chemists/chemist/NNS and/and/CC other/other/JJ "
     "scientists/scientist/NNS had/have/VBD long/long/RB "
     "suspected/suspect/VBN this/this/DT ././SENT",
     {("scientist", "chemist")}),
    ("hyper05",
     "Petroleum/petroleum/NN and/and/CC other/other/JJ poisons/poison/NNS "
     "must/must/MD be/be/VB controlled/control/VBN ././SENT",
     {("poison", "petroleum")}),
    ("hyper05",
     "Solvents/solvent/NNS and/and/CC other/other/JJ "
     "examples/example/NNS exist/exist/VBP ././SENT",
     set()),

    # -- hyper06: X is defined/classified/categorized as Y -----------------
    ("hyper06",
     "Carbon/carbon/NN ,/,/, nitrogen/nitrogen/NN and/and/CC "
     "oxygen/oxygen/NN are/be/VBP classified/classify/VBN as/as/IN "
     "non-metals/non-metal/NNS ././SENT",
     {("non-metal", "carbon"), ("non-metal", "nitrogen"),
      ("non-metal", "oxygen")}),
    ("hyper06",
     "Critical/critical/JJ habitat/habitat/NN is/be/VBZ "
     "defined/define/VBN as/as/IN any/any/DT place/place/NN "
     "essential/essential/JJ for/for/IN conservation/conservation/NN "
     "././SENT",
     {("place", "habitat")}),
    ("hyper06",
     "Viscosity/viscosity/NN may/may/MD be/be/VB defined/define/VBN "
     "as/as/IN internal/internal/JJ friction/friction/NN ././SENT",
     {("friction", "viscosity")}),
    ("hyper06",
     "Pollutants/pollutant/NNS are/be/VBP defined/define/VBN as/as/IN "
     "any/any/DT agent/agent/NN that/that/WDT causes/cause/VBZ "
     "harm/harm/NN ././SENT",
     {("agent", "pollutant")}),
    ("hyper06",
     "Incineration/incineration/NN is/be/VBZ categorised/categorise/VBN "
     "as/as/IN a/a/DT method/method/NN ././SENT",
     {("method", "incineration")}),
    ("hyper06",
     "Dioxins/dioxin/NNS are/be/VBP not/not/RB classified/classify/VBN "
     "as/as/IN safe/safe/JJ ././SENT",
     set()),

    # -- hyper07: X is considered (to be) Y --------------------------------
    ("hyper07",
     "Most/most/JJS groundwater/groundwater/NN is/be/VBZ "
     "considered/consider/VBN a/a/DT nonrenewable/nonrenewable/JJ "
     "resource/resource/NN ././SENT",
     {("resource", "groundwater")}),
    ("hyper07",
     "Lead-acid/lead-acid/JJ batteries/battery/NNS are/be/VBP "
     "considered/consider/VBN to/to/TO be/be/VB hazardous/hazardous/JJ "
     "waste/waste/NN ././SENT",
     {("waste", "battery")}),
    ("hyper07",
     "The/the/DT electric/electric/JJ car/car/NN is/be/VBZ "
     "considered/consider/VBN to/to/TO be/be/VB a/a/DT "
     "zero-emission/zero-emission/JJ vehicle/vehicle/NN ././SENT",
     {("vehicle", "car")}),
    ("hyper07",
     "Methane/methane/NN is/be/VBZ considered/consider/VBN a/a/DT "
     "dangerous/dangerous/JJ pollutant/pollutant/NN ././SENT",
     {("pollutant", "methane")}),
    ("hyper07",
     "Recycling/recycling/NN is/be/VBZ widely/widely/RB "
     "considered/consider/VBN a/a/DT beneficial/beneficial/JJ "
     "practice/practice/NN ././SENT",
     {("practice", "recycling")}),
    ("hyper07",
     "Dioxins/dioxin/NNS are/be/VBP not/not/RB considered/consider/VBN "
     "safe/safe/JJ compounds/compound/NNS ././SENT",
     set()),

    # -- hyper08: X is (a) Y -----------------------------------------------
    ("hyper08",
     "Ammonia/ammonia/NN is/be/VBZ a/a/DT nutrient/nutrient/NN for/for/IN "
     "bacterial/bacterial/JJ growth/growth/NN ././SENT",
     {("nutrient", "ammonia")}),
    ("hyper08",
     "Mutations/mutation/NNS are/be/VBP changes/change/NNS in/in/IN "
     "the/the/DT DNA/dna/NP sequence/sequence/NN ././SENT",
     {("change", "mutation")}),
    ("hyper08",
     "Foxes/fox/NNS are/be/VBP omnivores/omnivore/NNS ././SENT",
     {("omnivore", "fox")}),
    ("hyper08",
     "Energy/energy/NN is/be/VBZ a/a/DT property/property/NN of/of/IN "
     "objects/object/NNS ././SENT",
     {("property", "energy")}),
    # hyper08 must not fire on a genus-marker construction (hyper01 does)
    ("hyper08",
     "Water/water/NN is/be/VBZ a/a/DT type/type/NN of/of/IN "
     "resource/resource/NN ././SENT",
     set()),
    ("hyper01",
     "Water/water/NN is/be/VBZ a/a/DT type/type/NN of/of/IN "
     "resource/resource/NN ././SENT",
     {("resource", "water")}),
    ("hyper08",
     "The/the/DT water/water/NN is/be/VBZ clean/clean/JJ ././SENT",
     set()),

    # -- hyper09: define X as Y --------------------------------------------
    ("hyper09",
     "The/the/DT directive/directive/NN defines/define/VBZ a/a/DT "
     "flood/flood/NN as/as/IN a/a/DT temporary/temporary/JJ "
     "covering/covering/NN of/of/IN land/land/NN ././SENT",
     {("covering", "flood")}),
    ("hyper09",
     "We/we/PP define/define/VBP pressure/pressure/NN as/as/IN the/the/DT "
     "applied/applied/JJ force/force/NN ././SENT",
     {("force", "pressure")}),
    ("hyper09",
     "Scientists/scientist/NNS have/have/VBP defined/define/VBN "
     "hydrostatics/hydrostatics/NN as/as/IN the/the/DT study/study/NN "
     "of/of/IN resting/resting/JJ fluids/fluid/NNS ././SENT",
     {("study", "hydrostatics")}),
    ("hyper09",
     "The/the/DT FAO/fao/NP has/have/VBZ defined/define/VBN a/a/DT "
     "pesticide/pesticide/NN as/as/IN any/any/DT substance/substance/NN "
     "intended/intend/VBN for/for/IN preventing/prevent/VBG "
     "pests/pest/NNS ././SENT",
     {("substance", "pesticide")}),
    ("hyper09",
     "The/the/DT law/law/NN defines/define/VBZ the/the/DT "
     "penalties/penalty/NNS ././SENT",
     set()),

    # -- hyper10: X refers to Y --------------------------------------------
    ("hyper10",
     "Porosity/porosity/NN refers/refer/VBZ to/to/TO the/the/DT "
     "air-holding/air-holding/JJ capacity/capacity/NN of/of/IN the/the/DT "
     "soil/soil/NN ././SENT",
     {("capacity", "porosity")}),
    ("hyper10",
     "Desertification/desertification/NN refers/refer/VBZ to/to/TO "
     "the/the/DT process/process/NN of/of/IN becoming/become/VBG "
     "desert/desert/NN ././SENT",
     {("process", "desertification")}),
    ("hyper10",
     "Fertility/fertility/NN refers/refer/VBZ to/to/TO the/the/DT "
     "sustaining/sustaining/JJ ability/ability/NN of/of/IN a/a/DT "
     "soil/soil/NN ././SENT",
     {("ability", "fertility")}),
    ("hyper10",
     "Solidification/solidification/NN refers/refer/VBZ to/to/TO a/a/DT "
     "physical/physical/JJ change/change/NN ././SENT",
     {("change", "solidification")}),
    ("hyper10",
     "Settlers/settler/NNS referred/refer/VBD to/to/TO it/it/PP "
     "often/often/RB ././SENT",
     set()),
]
