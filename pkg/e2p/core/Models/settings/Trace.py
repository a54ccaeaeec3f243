import jinja2

from e2p.core.Models.settings.SettingsEntry import SettingsEntry
from e2p.core.TermAnalyser import TermAnalyser

DEFAULT_TEMPLATE = "STEP {{ n }} rule={{ rule }} goal={{ goal }} evd-head={{ head }}"


class Trace(SettingsEntry):
    """
    Line format of the derivation trace, a jinja2 template receiving n, rule, goal and head
    """

    def __init__(self, template=DEFAULT_TEMPLATE):
        super(Trace, self).__init__(name="Trace")
        self.template = template

    def render(self, n, step):
        """
        Render the trace line of a derivation step

        :param n: position of the step, starting at 1
        :type n: int
        :param step: the recorded step
        :type step: DerivationStep
        :return: the trace line, without line break
        :rtype: str
        """
        return jinja2.Template(self.template).render(n=n,
                                                     rule=step.rule.value,
                                                     goal=str(step.parent.goal),
                                                     head=TermAnalyser.head_name(step.parent.evidence))

    def serialize(self):
        return {
            'name': self.name,
            'template': self.template
        }
