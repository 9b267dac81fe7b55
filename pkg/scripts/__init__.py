"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Developer scripts
"""
